#pragma once

#include "parmacov/model.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace parmacov {

/// Weights psi_k^(v) of the causal MA(infinity) representation,
/// y_t = sum_{k>=0} psi_k^(v) e_{t-k}, for all seasons and k = 0..max_k.
struct PsiTable {
    int period = 0;
    int max_k = 0;
    std::vector<double> values; ///< season-major: values[(v-1)*(max_k+1) + k]

    double at(int v, int k) const {
        assert(v >= 1 && v <= period && k >= 0 && k <= max_k);
        return values[static_cast<std::size_t>(v - 1) * (max_k + 1) + k];
    }
};

/// Fills the table by the recursion
///   psi_k^(v) = -theta_k^(v) [k <= q] + sum_{j=1..min(k,p)} phi_j^(v) psi_{k-j}^(v-j)
/// with psi_0^(v) = 1 and season superscripts wrapped onto 1..S.
PsiTable compute_psi(const ParmaModel& model, int max_k);

} // namespace parmacov
