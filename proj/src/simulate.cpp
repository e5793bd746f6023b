#include "parmacov/simulate.hpp"

#include "parmacov/errors.hpp"
#include "parmacov/rng.hpp"

#include <cmath>
#include <string>

namespace parmacov {

SimulatedSeries simulate(const ParmaModel& model, int n_periods, int burn_in_periods,
                         std::uint64_t seed, NoiseKind noise) {
    if (n_periods < 1) {
        throw InvalidArgument("n_periods must be >= 1, got " + std::to_string(n_periods));
    }
    if (burn_in_periods < 0) {
        throw InvalidArgument("burn_in_periods must be non-negative");
    }
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        throw NotCausal("cannot simulate: monodromy spectral radius " +
                        std::to_string(report.spectral_radius) + " is not below 1");
    }

    const int S = model.period();
    const int p = model.ar_order();
    const int q = model.ma_order();
    const std::size_t total = static_cast<std::size_t>(burn_in_periods + n_periods) * S;

    std::vector<double> scale(S);
    for (int v = 1; v <= S; ++v) {
        scale[v - 1] = std::sqrt(model.sigma2(v));
    }

    GaussianSampler gaussian(seed);
    SplitMix64 bits(seed);
    std::vector<double> y(total, 0.0);
    std::vector<double> eps(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        const int v = static_cast<int>(t % S) + 1;
        const double draw = noise == NoiseKind::gaussian
                                ? gaussian.next()
                                : ((bits.next() & 1ull) != 0 ? 1.0 : -1.0);
        eps[t] = scale[v - 1] * draw;
        double value = eps[t];
        for (int j = 1; j <= p && static_cast<std::size_t>(j) <= t; ++j) {
            value += model.phi(v, j) * y[t - j];
        }
        for (int j = 1; j <= q && static_cast<std::size_t>(j) <= t; ++j) {
            value -= model.theta(v, j) * eps[t - j];
        }
        y[t] = value;
    }

    SimulatedSeries series;
    series.period = S;
    series.n_periods = n_periods;
    series.seed = seed;
    series.rng_id =
        noise == NoiseKind::gaussian ? "splitmix64-box-muller" : "splitmix64-rademacher";
    const std::size_t offset = static_cast<std::size_t>(burn_in_periods) * S;
    series.data.assign(y.begin() + offset, y.end());
    return series;
}

double sample_periodic_acov(const SimulatedSeries& series, int v, int h, bool center) {
    const int S = series.period;
    if (v < 1 || v > S) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(S));
    }
    if (h < 0) {
        throw InvalidArgument("lag h must be non-negative, got " + std::to_string(h));
    }

    std::vector<double> means(S, 0.0);
    if (center) {
        for (std::size_t m = 0; m < series.data.size(); ++m) {
            means[m % S] += series.data[m];
        }
        for (int w = 0; w < S; ++w) {
            means[w] /= series.n_periods;
        }
    }

    double sum = 0.0;
    long long pairs = 0;
    for (int n = 1; n <= series.n_periods; ++n) {
        const long long idx = static_cast<long long>(n - 1) * S + (v - 1);
        const long long lagged = idx - h;
        if (lagged < 0) {
            continue;
        }
        const double a = series.data[idx] - means[idx % S];
        const double b = series.data[lagged] - means[lagged % S];
        sum += a * b;
        ++pairs;
    }
    if (pairs < 2) {
        throw InsufficientData("only " + std::to_string(pairs) +
                               " aligned pairs available at season " + std::to_string(v) +
                               ", lag " + std::to_string(h));
    }
    return sum / static_cast<double>(pairs);
}

} // namespace parmacov
