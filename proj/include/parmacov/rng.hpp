#pragma once

#include <cmath>
#include <cstdint>

namespace parmacov {

/// SplitMix64, the fixed 64-bit generator behind every simulation in this
/// library. The update adds the golden-gamma constant to the state and
/// scrambles it with the standard two-round finalizer, so outputs are
/// reproducible across platforms and versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1]; never zero, safe under log().
    double next_open_closed() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform double in [0, 1).
    double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Seed of the independent substream for replicate `index` of a master seed:
/// the SplitMix64 finalizer applied to seed + (index + 1) * golden gamma.
/// Each replicate's stream is a function of (seed, index) alone.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Standard normal deviates from a SplitMix64 stream via the Box-Muller
/// transform; pairs are generated together and handed out one at a time.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) noexcept : rng_(seed) {}

    double next() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_open_closed();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace parmacov
