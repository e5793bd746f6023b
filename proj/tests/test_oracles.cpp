#include "parmacov/oracle.hpp"

#include "parmacov/errors.hpp"
#include "parmacov/rng.hpp"
#include "parmacov/simulate.hpp"
#include "support/random_models.hpp"
#include "support/stats.hpp"

#include <doctest.h>

#include <cmath>

using namespace parmacov;

TEST_CASE("MA(infinity) sum on fixtures") {
    SUBCASE("white noise variance") {
        const ParmaModel model(1, 0, 0, {}, {}, {2.0});
        CHECK(acf_ma_infinity(model, 1, 0, 1e-12) == 2.0);
        CHECK(acf_ma_infinity(model, 1, 3, 1e-12) == 0.0);
    }
    SUBCASE("ARMA(1,1) closed form") {
        const ParmaModel model(1, 1, 1, {{0.5}}, {{0.4}}, {1.0});
        CHECK(acf_ma_infinity(model, 1, 0, 1e-12) ==
              doctest::Approx(76.0 / 75.0).epsilon(1e-8));
        CHECK(acf_ma_infinity(model, 1, 1, 1e-12) ==
              doctest::Approx(8.0 / 75.0).epsilon(1e-8));
        CHECK(acf_ma_infinity(model, 1, 2, 1e-12) ==
              doctest::Approx(4.0 / 75.0).epsilon(1e-8));
    }
    SUBCASE("periodic MA(1) cross term") {
        const ParmaModel model(2, 0, 1, {}, {{0.3}, {0.7}}, {1.0, 1.0});
        CHECK(acf_ma_infinity(model, 1, 1, 1e-12) == doctest::Approx(-0.3).epsilon(1e-14));
        CHECK(acf_ma_infinity(model, 2, 1, 1e-12) == doctest::Approx(-0.7).epsilon(1e-14));
    }
    SUBCASE("gates and argument checks") {
        const ParmaModel bad(1, 1, 0, {{1.1}}, {}, {1.0});
        CHECK_THROWS_AS(acf_ma_infinity(bad, 1, 0, 1e-10), NotCausal);
        const ParmaModel ok(1, 0, 0, {}, {}, {1.0});
        CHECK_THROWS_AS(acf_ma_infinity(ok, 2, 0, 1e-10), SeasonOutOfRange);
        CHECK_THROWS_AS(acf_ma_infinity(ok, 1, -1, 1e-10), InvalidArgument);
        CHECK_THROWS_AS(acf_ma_infinity(ok, 1, 0, 0.0), InvalidArgument);
    }
    SUBCASE("near-unit-root model exhausts the truncation cap") {
        const ParmaModel slow(1, 1, 0, {{0.999999}}, {}, {1.0});
        CHECK(check_causality(slow).near_boundary);
        CHECK_THROWS_AS(acf_ma_infinity(slow, 1, 0, 1e-16), TruncationDidNotConverge);
    }
}

TEST_CASE("solver and MA(infinity) oracle agree on random causal models") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const ParmaModel model =
            testsupport::random_causal_model(rng, {1, 2, 4}, 3, 3, 0.9);
        const int max_lag =
            model.ar_order() + model.ma_order() + 2 * model.period();
        const AutocovTable table = compute_autocovariances(model, max_lag);
        for (int v = 1; v <= model.period(); ++v) {
            const double budget = 1e-8 * std::max(1.0, std::abs(table.gamma(v, 0)));
            for (int h = 0; h <= max_lag; ++h) {
                const double oracle = acf_ma_infinity(model, v, h, 1e-10);
                CHECK(std::abs(table.gamma(v, h) - oracle) <= budget);
            }
        }
    }
}

TEST_CASE("simulation is deterministic in its seed") {
    const ParmaModel model(2, 1, 1, {{0.5}, {-0.4}}, {{0.2}, {0.1}}, {1.0, 2.0});
    const SimulatedSeries a = simulate(model, 50, 10, 42);
    const SimulatedSeries b = simulate(model, 50, 10, 42);
    CHECK(a.data == b.data);
    CHECK(a.rng_id == "splitmix64-box-muller");
    CHECK(a.data.size() == 100);

    const SimulatedSeries c = simulate(model, 50, 10, 43);
    CHECK(a.data != c.data);

    CHECK_THROWS_AS(simulate(model, 0, 10, 42), InvalidArgument);
    CHECK_THROWS_AS(simulate(model, 10, -1, 42), InvalidArgument);
    CHECK_THROWS_AS(simulate(ParmaModel(1, 1, 0, {{1.1}}, {}, {1.0}), 10, 10, 42), NotCausal);
}

TEST_CASE("simulated white noise has the right variance") {
    const ParmaModel model(1, 0, 0, {}, {}, {1.0});
    const SimulatedSeries series = simulate(model, 100000, 0, 42);
    const double var = sample_periodic_acov(series, 1, 0);
    CHECK(var > 0.98);
    CHECK(var < 1.02);
}

TEST_CASE("retained data stays aligned to season 1") {
    // Hugely different per-season variances make any misalignment obvious.
    const ParmaModel model(2, 0, 0, {}, {}, {1.0, 10000.0});
    const SimulatedSeries series = simulate(model, 5000, 7, 11);
    const double v1 = sample_periodic_acov(series, 1, 0);
    const double v2 = sample_periodic_acov(series, 2, 0);
    CHECK(v2 / v1 > 100.0);
}

TEST_CASE("sample autocovariance on a handmade series") {
    SimulatedSeries series;
    series.period = 1;
    series.n_periods = 4;
    series.data = {1.0, -1.0, 1.0, -1.0};

    CHECK(sample_periodic_acov(series, 1, 0) == 1.0);
    CHECK(sample_periodic_acov(series, 1, 1) == -1.0);
    CHECK_THROWS_AS(sample_periodic_acov(series, 1, 3), InsufficientData);
    CHECK_THROWS_AS(sample_periodic_acov(series, 2, 0), SeasonOutOfRange);
    CHECK_THROWS_AS(sample_periodic_acov(series, 1, -1), InvalidArgument);

    SimulatedSeries constant;
    constant.period = 1;
    constant.n_periods = 4;
    constant.data = {2.0, 2.0, 2.0, 2.0};
    CHECK(sample_periodic_acov(constant, 1, 0, false) == 4.0);
    CHECK(sample_periodic_acov(constant, 1, 0, true) == 0.0);

    SimulatedSeries tiny;
    tiny.period = 1;
    tiny.n_periods = 1;
    tiny.data = {1.0};
    CHECK_THROWS_AS(sample_periodic_acov(tiny, 1, 1), InsufficientData);
}

TEST_CASE("difference-equation residuals") {
    SUBCASE("exact tables pass") {
        const ParmaModel model(1, 1, 1, {{0.5}}, {{0.4}}, {1.0});
        const PsiTable psi = compute_psi(model, 1);
        const AutocovTable table = compute_autocovariances(model, 10);
        CHECK(verify_residuals(model, table, psi) <= 1e-10);
    }
    SUBCASE("white noise is exact") {
        const ParmaModel model(1, 0, 0, {}, {}, {2.0});
        const AutocovTable table = compute_autocovariances(model, 3);
        CHECK(verify_residuals(model, table, compute_psi(model, 0)) == 0.0);
    }
    SUBCASE("a perturbed entry is detected") {
        const ParmaModel model(1, 0, 0, {}, {}, {2.0});
        AutocovTable table = compute_autocovariances(model, 3);
        table.values[0] += 1.0; // gamma_0 becomes 3, breaking the h = 0 equation by 1
        const double residual = verify_residuals(model, table, compute_psi(model, 0));
        CHECK(residual == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("short tables are rejected") {
        const ParmaModel model(1, 2, 0, {{0.3, 0.2}}, {}, {1.0});
        const AutocovTable table = compute_autocovariances(model, 1);
        CHECK_THROWS_AS(verify_residuals(model, table, compute_psi(model, 0)), TableTooShort);
    }
}

TEST_CASE("residuals vanish on random causal models") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const ParmaModel model =
            testsupport::random_causal_model(rng, {1, 2, 3, 6}, 4, 4, 0.9);
        const int max_lag =
            std::max(model.ar_order(), model.ar_order() + model.ma_order() + model.period());
        const AutocovTable table = compute_autocovariances(model, max_lag);
        const PsiTable psi = compute_psi(model, model.ma_order());
        CHECK(verify_residuals(model, table, psi) <= 1e-10);
    }
}

TEST_CASE("innovation law does not move the autocovariances") {
    // Second moments are all that matters: Rademacher innovations with the
    // same variances must reproduce the same autocovariance targets.
    const ParmaModel model(2, 1, 0, {{0.5}, {0.8}}, {}, {1.0, 1.0});
    const AutocovTable table = compute_autocovariances(model, 2);
    const SimulatedSeries series =
        simulate(model, 50000, kDefaultBurnInPeriods, substream_seed(2024, 3),
                 NoiseKind::rademacher);
    CHECK(series.rng_id == "splitmix64-rademacher");
    for (int v = 1; v <= 2; ++v) {
        for (int h = 0; h <= 2; ++h) {
            const auto est = testsupport::batched_sample_acov(series, v, h);
            CHECK(std::abs(est.mean - table.gamma(v, h)) <= 5.0 * est.std_error);
        }
    }
}
