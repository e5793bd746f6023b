#include "parmacov/matrix.hpp"

#include "parmacov/errors.hpp"
#include "parmacov/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace parmacov;

TEST_CASE("matrix product and identity") {
    Matrix a(2, 3);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(0, 2) = 3.0;
    a(1, 0) = 4.0;
    a(1, 1) = 5.0;
    a(1, 2) = 6.0;
    const Matrix i3 = Matrix::identity(3);
    CHECK(a * i3 == a);
    CHECK(Matrix::identity(2) * a == a);
    CHECK_THROWS_AS(i3 * a, DimensionMismatch);
}

TEST_CASE("lu_solve on small fixed systems") {
    SUBCASE("2x2") {
        Matrix a(2, 2);
        a(0, 0) = 2.0;
        a(0, 1) = 1.0;
        a(1, 0) = 1.0;
        a(1, 1) = 3.0;
        const auto x = lu_solve(a, {5.0, 10.0});
        CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("permutation matrix forces pivoting") {
        Matrix a(2, 2);
        a(0, 1) = 1.0;
        a(1, 0) = 1.0;
        const auto x = lu_solve(a, {2.0, 3.0});
        CHECK(x[0] == 3.0);
        CHECK(x[1] == 2.0);
    }
}

TEST_CASE("lu_solve residuals on random systems") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 12);
        Matrix a(n, n);
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i) {
            b[i] = 2.0 * rng.next_unit() - 1.0;
            for (int j = 0; j < n; ++j) {
                a(i, j) = 2.0 * rng.next_unit() - 1.0;
            }
            a(i, i) += n; // keep the system comfortably regular
        }
        const auto x = lu_solve(a, b);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = -b[i];
            for (int j = 0; j < n; ++j) {
                r += a(i, j) * x[j];
            }
            worst = std::max(worst, std::abs(r));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("lu_solve rejects singular systems") {
    Matrix rank1(2, 2);
    rank1(0, 0) = 1.0;
    rank1(0, 1) = 2.0;
    rank1(1, 0) = 2.0;
    rank1(1, 1) = 4.0;
    CHECK_THROWS_AS(lu_solve(rank1, {1.0, 2.0}), SingularSystem);

    const Matrix zero(3, 3);
    CHECK_THROWS_AS(lu_solve(zero, {1.0, 1.0, 1.0}), SingularSystem);

    Matrix bad(2, 3);
    CHECK_THROWS_AS(lu_solve(bad, {1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("spectral radius estimates on known matrices") {
    SUBCASE("nilpotent") {
        Matrix a(2, 2);
        a(0, 1) = 1.0;
        CHECK(spectral_radius(a) == 0.0);
    }
    SUBCASE("diagonal") {
        Matrix a(2, 2);
        a(0, 0) = 0.5;
        a(1, 1) = 0.25;
        CHECK(spectral_radius(a) == doctest::Approx(0.5).epsilon(1e-11));
    }
    SUBCASE("complex eigenvalue pair") {
        Matrix a(2, 2);
        a(0, 1) = -0.8;
        a(1, 0) = 0.8;
        CHECK(spectral_radius(a) == doctest::Approx(0.8).epsilon(1e-10));
    }
    SUBCASE("defective matrix converges too") {
        Matrix a(2, 2);
        a(0, 0) = 0.9;
        a(0, 1) = 1.0;
        a(1, 1) = 0.9;
        bool converged = false;
        const double rho = spectral_radius(a, &converged);
        CHECK(converged);
        CHECK(rho == doctest::Approx(0.9).epsilon(1e-9));
    }
    SUBCASE("radius above one") {
        Matrix a(2, 2);
        a(0, 0) = 0.0;
        a(0, 1) = 2.0;
        a(1, 0) = 0.5;
        a(1, 1) = 0.0;
        CHECK(spectral_radius(a) == doctest::Approx(1.0).epsilon(1e-10));
    }
}
