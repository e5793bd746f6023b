#pragma once

#include "parmacov/matrix.hpp"
#include "parmacov/model.hpp"
#include "parmacov/psi.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace parmacov {

/**
 * The periodic Yule-Walker system for the start-up autocovariances.
 *
 * The matrix is built from S x S blocks of size (p+1): block (v, w) is the
 * folded AR block at offset (v - w) mod S for row season v, so the layout is
 * block-circulant by offset while block contents vary with the row season.
 * Rows are season-major: row (v-1)(p+1) + h carries the equation for
 * gamma_h^(v), 0 <= h <= p, and `zeta` holds the matching right-hand sides.
 */
struct YuleWalkerSystem {
    int dimension = 0; ///< S * (p + 1)
    Matrix phi_matrix;
    std::vector<double> zeta;
};

/// Per-season autocovariances gamma_h^(v) for h = 0..max_lag.
struct AutocovTable {
    int period = 0;
    int max_lag = 0;
    std::vector<double> values; ///< season-major: values[(v-1)*(max_lag+1) + h]

    /// gamma_h^(v) for a non-negative lag; 1 <= v <= period, 0 <= h <= max_lag.
    double gamma(int v, int h) const {
        assert(v >= 1 && v <= period && h >= 0 && h <= max_lag);
        return values[static_cast<std::size_t>(v - 1) * (max_lag + 1) + h];
    }
};

/// The AR block at season v and lag h: a (p+1)-square matrix whose first h
/// rows vanish, whose row h+1 holds (-phi_h, ..., -phi_p) with the implicit
/// phi_0 = -1, and whose remaining rows carry -phi_h on a shifted diagonal.
/// Zero for h > p.
Matrix phi_block(const ParmaModel& model, int v, int h);

/// Folds the blocks of every lag congruent to k modulo S into one:
/// sum over n >= 0 of phi_block(model, v, n*S + k); only lags up to p
/// contribute. Offset k must lie in 0..S-1.
Matrix folded_phi_block(const ParmaModel& model, int v, int k);

/// Assembles the full system. `psi` must cover k = 0..q.
YuleWalkerSystem assemble_system(const ParmaModel& model, const PsiTable& psi);

/// Solves the assembled system for the S(p+1) start-up autocovariances,
/// ordered season-major as (gamma_0^(1), ..., gamma_p^(1), gamma_0^(2), ...).
/// Throws NotCausal when the causality check fails, SingularSystem when the
/// solve degenerates.
std::vector<double> solve_startup(const ParmaModel& model);

/// Extends start-up values to lags 0..max_lag (max_lag >= p) through the
/// defining difference equation, one lag column at a time.
AutocovTable extend_autocovariances(const ParmaModel& model, const std::vector<double>& startup,
                                    const PsiTable& psi, int max_lag);

/// Convenience pipeline: psi weights, start-up solve, lag extension, then
/// truncation to the requested max_lag (which may be below p).
AutocovTable compute_autocovariances(const ParmaModel& model, int max_lag);

/// Autocovariance at any integer lag, using gamma_{-h}^(v) = gamma_h^(v+h)
/// for negative lags. Throws LagOutOfRange when |h| exceeds the table.
double autocov_at(const AutocovTable& table, int v, long long h);

} // namespace parmacov
