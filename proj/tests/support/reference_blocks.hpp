#pragma once

#include "parmacov/yule_walker.hpp"

#include <bit>
#include <cstdint>

namespace testsupport {

/// Reference for the folded blocks: literally sums the per-lag blocks at
/// every lag congruent to k modulo S, independent of the production path's
/// template substitution.
inline parmacov::Matrix folded_block_by_summation(const parmacov::ParmaModel& model, int v,
                                                  int k) {
    const int p = model.ar_order();
    parmacov::Matrix sum(p + 1, p + 1);
    for (int h = k; h <= p; h += model.period()) {
        const parmacov::Matrix block = parmacov::phi_block(model, v, h);
        for (int i = 0; i <= p; ++i) {
            for (int j = 0; j <= p; ++j) {
                sum(i, j) += block(i, j);
            }
        }
    }
    return sum;
}

inline bool bit_equal(const parmacov::Matrix& a, const parmacov::Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a.data()[i]) !=
            std::bit_cast<std::uint64_t>(b.data()[i])) {
            return false;
        }
    }
    return true;
}

} // namespace testsupport
