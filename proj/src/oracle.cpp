#include "parmacov/oracle.hpp"

#include "parmacov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace parmacov {

namespace {

double truncated_acov(const ParmaModel& model, const PsiTable& psi, int v, int h, int terms) {
    const int S = model.period();
    const int lagged_season = season_wrap(v - h, S);
    double sum = 0.0;
    for (int k = 0; k <= terms; ++k) {
        sum += psi.at(v, k + h) * psi.at(lagged_season, k) *
               model.sigma2(season_wrap(static_cast<long long>(v) - h - k, S));
    }
    return sum;
}

} // namespace

double acf_ma_infinity(const ParmaModel& model, int v, int h, double tol) {
    if (v < 1 || v > model.period()) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(model.period()));
    }
    if (h < 0) {
        throw InvalidArgument("lag h must be non-negative, got " + std::to_string(h));
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("tolerance must be positive");
    }
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        throw NotCausal("MA(infinity) sum diverges: monodromy spectral radius " +
                        std::to_string(report.spectral_radius) + " is not below 1");
    }

    constexpr int cap = 1 << 20;
    int terms = 128;
    PsiTable psi = compute_psi(model, terms + h);
    double prev = truncated_acov(model, psi, v, h, terms);
    while (terms < cap) {
        terms *= 2;
        psi = compute_psi(model, terms + h);
        const double current = truncated_acov(model, psi, v, h, terms);
        if (std::abs(current - prev) < tol * std::max(1.0, std::abs(current))) {
            return current;
        }
        prev = current;
    }
    throw TruncationDidNotConverge("truncation cap of 2^20 terms reached at season " +
                                   std::to_string(v) + ", lag " + std::to_string(h));
}

double verify_residuals(const ParmaModel& model, const AutocovTable& table,
                        const PsiTable& psi) {
    const int S = model.period();
    const int p = model.ar_order();
    const int q = model.ma_order();
    if (table.period != S) {
        throw DimensionMismatch("table period " + std::to_string(table.period) +
                                " does not match model period " + std::to_string(S));
    }
    if (table.max_lag < p) {
        throw TableTooShort("table covers lags <= " + std::to_string(table.max_lag) +
                            " but the AR order is " + std::to_string(p));
    }
    if (psi.max_k < q) {
        throw PsiTableTooShort("psi table covers k <= " + std::to_string(psi.max_k) +
                               " but the MA order is " + std::to_string(q));
    }

    double worst = 0.0;
    for (int v = 1; v <= S; ++v) {
        const double scale = std::max(1.0, std::abs(table.gamma(v, 0)));
        for (int h = 0; h <= table.max_lag; ++h) {
            double lhs = table.gamma(v, h);
            for (int j = 1; j <= p; ++j) {
                lhs -= model.phi(v, j) * autocov_at(table, season_wrap(v - j, S), h - j);
            }
            double rhs = 0.0;
            if (h <= q) {
                const int vh = season_wrap(v - h, S);
                for (int j = h; j <= q; ++j) {
                    const double theta_j = j == 0 ? -1.0 : model.theta(v, j);
                    rhs -= theta_j * psi.at(vh, j - h) * model.sigma2(season_wrap(v - j, S));
                }
            }
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return worst;
}

} // namespace parmacov
