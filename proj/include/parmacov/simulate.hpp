#pragma once

#include "parmacov/model.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace parmacov {

/// Innovation law for simulation. Autocovariances depend only on the
/// variance structure, so any white-noise law yields the same targets;
/// the Rademacher option exists to demonstrate exactly that.
enum class NoiseKind {
    gaussian,
    rademacher,
};

/// Default number of full cycles discarded before retaining output.
inline constexpr int kDefaultBurnInPeriods = 500;

/// A simulated PARMA path. Retained data always starts at season 1:
/// data[(n-1)*period + v - 1] is the observation at season v of cycle n.
struct SimulatedSeries {
    int period = 0;
    int n_periods = 0;
    std::vector<double> data;
    std::uint64_t seed = 0;
    std::string rng_id; ///< names the generator, e.g. "splitmix64-box-muller"

    double at(int cycle, int v) const {
        return data[static_cast<std::size_t>(cycle - 1) * period + v - 1];
    }
};

/// Iterates the model recursion from zero initial conditions, discards
/// `burn_in_periods` full cycles and retains `n_periods` more. Deterministic
/// given (model, seed, burn_in_periods, n_periods, noise).
SimulatedSeries simulate(const ParmaModel& model, int n_periods, int burn_in_periods,
                         std::uint64_t seed, NoiseKind noise = NoiseKind::gaussian);

/// Empirical autocovariance at season v and non-negative lag h: the average
/// of y_{v+nS} * y_{v+nS-h} over every retained cycle whose lagged index
/// stays inside the retained window, divided by the number of such pairs.
/// With `center`, per-season sample means are removed first.
double sample_periodic_acov(const SimulatedSeries& series, int v, int h, bool center = false);

} // namespace parmacov
