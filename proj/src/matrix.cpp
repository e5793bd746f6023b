#include "parmacov/matrix.hpp"

#include "parmacov/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace parmacov {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product: " + std::to_string(a.cols()) + " columns vs " +
                                std::to_string(b.rows()) + " rows");
    }
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double inf_norm(const Matrix& a) {
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.cols(); ++j) {
            row += std::abs(a(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

double spectral_radius(Matrix a, bool* converged) {
    constexpr int max_squarings = 200;
    constexpr double tol = 1e-12;
    if (converged != nullptr) {
        *converged = true;
    }
    if (a.rows() == 1) {
        return std::abs(a(0, 0));
    }

    // a represents M^weight / exp(log_scale); the estimate after each step is
    // (||a|| * exp(log_scale))^(1/weight). Convergence is only accepted once
    // the power exceeds the dimension: below that, nilpotent structure (the
    // companion subdiagonals) can hold the norm at exactly 1 and fake a limit.
    int min_squarings = 4;
    while ((1LL << min_squarings) < 4LL * a.rows()) {
        ++min_squarings;
    }

    double log_scale = 0.0;
    double weight = 1.0;
    double prev = -1.0;
    for (int iter = 0; iter < max_squarings; ++iter) {
        const double n = inf_norm(a);
        if (n == 0.0) {
            return 0.0;
        }
        const double est = weight == 1.0 ? n : std::exp((std::log(n) + log_scale) / weight);
        if (iter >= min_squarings && std::abs(est - prev) < tol) {
            return est;
        }
        if (n < 1e-280) {
            // The normalized square collapsed; squaring further would
            // underflow and the estimate cannot move meaningfully anymore.
            return est;
        }
        prev = est;

        const double inv = 1.0 / n;
        Matrix scaled(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                scaled(i, j) = a(i, j) * inv;
            }
        }
        a = scaled * scaled;
        log_scale = 2.0 * (log_scale + std::log(n));
        weight *= 2.0;
    }
    if (converged != nullptr) {
        *converged = false;
    }
    return prev;
}

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n) {
        throw DimensionMismatch("lu_solve: matrix must be square and match the right-hand side");
    }
    const double pivot_floor = 1e-12 * max_abs(a);

    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double pivot = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(a(r, col));
            if (cand > pivot) {
                pivot = cand;
                pivot_row = r;
            }
        }
        if (pivot < pivot_floor || pivot == 0.0) {
            throw SingularSystem("pivot " + std::to_string(pivot) + " below threshold at column " +
                                 std::to_string(col));
        }
        if (pivot_row != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a(col, c), a(pivot_row, c));
            }
            std::swap(b[col], b[pivot_row]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double factor = a(r, col) / a(col, col);
            if (factor == 0.0) {
                continue;
            }
            a(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
            }
            b[r] -= factor * b[col];
        }
    }

    std::vector<double> x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) {
            s -= a(r, c) * x[c];
        }
        x[r] = s / a(r, r);
    }
    return x;
}

} // namespace parmacov
