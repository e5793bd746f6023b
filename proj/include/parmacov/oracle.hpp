#pragma once

#include "parmacov/model.hpp"
#include "parmacov/psi.hpp"
#include "parmacov/yule_walker.hpp"

namespace parmacov {

/// Autocovariance from the causal representation alone:
///   gamma_h^(v) = sum_{k>=0} psi_{k+h}^(v) psi_k^(v-h) sigma2_{v-h-k},
/// truncated adaptively: the partial sum is evaluated at K = 128 terms and K
/// is doubled until two successive truncations differ by less than
/// tol * max(1, |estimate|), capping K at 2^20. Independent of the
/// Yule-Walker solve, so it serves as a cross-check on it.
double acf_ma_infinity(const ParmaModel& model, int v, int h, double tol);

/// Largest violation of the defining difference equation over every season
/// and every lag 0..table.max_lag, scaled per season by max(1, |gamma_0^(v)|).
/// Negative-lag reads go through autocov_at.
double verify_residuals(const ParmaModel& model, const AutocovTable& table, const PsiTable& psi);

} // namespace parmacov
