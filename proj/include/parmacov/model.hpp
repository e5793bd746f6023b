#pragma once

#include "parmacov/matrix.hpp"

#include <vector>

namespace parmacov {

/// Maps an arbitrary integer season index onto 1..period, so that
/// season_wrap(v + period, S) == season_wrap(v, S) for every v.
int season_wrap(long long v, int period) noexcept;

/**
 * A periodic ARMA (PARMA) model with period S and orders (p, q):
 *
 *   y_t = sum_{j=1..p} phi_j^(v) y_{t-j} + e_t - sum_{j=1..q} theta_j^(v) e_{t-j}
 *
 * where v in 1..S is the season of time t, coefficients and innovation
 * variances repeat with period S, and the innovations e_t are uncorrelated,
 * zero-mean, with per-season variance sigma2_v. Only the coefficients for
 * j >= 1 are stored; the implicit j = 0 terms (both equal to -1 when the
 * equation is written with every term on one side) are handled internally.
 *
 * Construction validates the description and is the only way to obtain an
 * instance; a ParmaModel is immutable afterwards and safe to share across
 * threads.
 */
class ParmaModel {
public:
    /// Throws DimensionMismatch, NonPositiveVariance or NonFiniteCoefficient
    /// when the description is inconsistent. Empty `phi`/`theta` are accepted
    /// as stand-ins for S rows of length zero when the matching order is 0.
    ParmaModel(int period, int ar_order, int ma_order,
               std::vector<std::vector<double>> phi,
               std::vector<std::vector<double>> theta,
               std::vector<double> sigma2);

    int period() const noexcept { return period_; }
    int ar_order() const noexcept { return ar_order_; }
    int ma_order() const noexcept { return ma_order_; }

    /// phi_j at season v; 1 <= v <= S, 1 <= j <= p.
    double phi(int v, int j) const { return phi_[v - 1][j - 1]; }
    /// theta_j at season v; 1 <= v <= S, 1 <= j <= q.
    double theta(int v, int j) const { return theta_[v - 1][j - 1]; }
    /// Innovation variance at season v; 1 <= v <= S.
    double sigma2(int v) const { return sigma2_[v - 1]; }

    const std::vector<std::vector<double>>& ar_coefficients() const noexcept { return phi_; }
    const std::vector<std::vector<double>>& ma_coefficients() const noexcept { return theta_; }
    const std::vector<double>& variances() const noexcept { return sigma2_; }

    bool operator==(const ParmaModel&) const = default;

private:
    int period_;
    int ar_order_;
    int ma_order_;
    std::vector<std::vector<double>> phi_;
    std::vector<std::vector<double>> theta_;
    std::vector<double> sigma2_;
};

/// Verdict of the causality check.
struct CausalityReport {
    double spectral_radius = 0.0; ///< radius of the one-period companion product
    bool is_causal = false;       ///< spectral_radius < 1
    bool near_boundary = false;   ///< spectral_radius > 0.999; MA(inf) sums converge slowly
};

/// Companion matrix of the AR part at season v: first row (phi_1 .. phi_p),
/// identity on the subdiagonal. Throws ArOrderZero when p = 0.
Matrix companion_matrix(const ParmaModel& model, int v);

/// Spectral radius of the monodromy product C_S * C_{S-1} * ... * C_1.
/// For p = 0 the radius is 0 and the model is trivially causal.
CausalityReport check_causality(const ParmaModel& model);

} // namespace parmacov
