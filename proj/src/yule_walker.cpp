#include "parmacov/yule_walker.hpp"

#include "parmacov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace parmacov {

namespace {

void check_season(const ParmaModel& model, int v) {
    if (v < 1 || v > model.period()) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(model.period()));
    }
}

// One structural entry of a folded block: cell (row, col) receives -phi_j,
// where j = 0 stands for the implicit phi_0 = -1 and contributes +1.
struct BlockTerm {
    int row;
    int col;
    int coef;
};

// Structural template of the folded block at offset k. The same template
// serves every season; only the coefficient values change. Terms are listed
// in increasing lag order so that substitution accumulates cells in the same
// order as summing the per-lag blocks directly.
std::vector<BlockTerm> folded_block_template(int period, int ar_order, int k) {
    std::vector<BlockTerm> terms;
    for (int h = k; h <= ar_order; h += period) {
        for (int c = 0; c + h <= ar_order; ++c) {
            terms.push_back({h, c, h + c});
        }
        for (int i = 1; i <= ar_order - h; ++i) {
            terms.push_back({h + i, i, h});
        }
    }
    return terms;
}

double term_value(const ParmaModel& model, int v, int coef) {
    return coef == 0 ? 1.0 : -model.phi(v, coef);
}

} // namespace

Matrix phi_block(const ParmaModel& model, int v, int h) {
    check_season(model, v);
    if (h < 0) {
        throw InvalidArgument("lag h must be non-negative, got " + std::to_string(h));
    }
    const int p = model.ar_order();
    Matrix block(p + 1, p + 1);
    if (h > p) {
        return block;
    }
    for (int c = 0; c + h <= p; ++c) {
        block(h, c) = term_value(model, v, h + c);
    }
    for (int i = 1; i <= p - h; ++i) {
        block(h + i, i) = term_value(model, v, h);
    }
    return block;
}

Matrix folded_phi_block(const ParmaModel& model, int v, int k) {
    check_season(model, v);
    if (k < 0 || k >= model.period()) {
        throw OffsetOutOfRange("offset " + std::to_string(k) + " outside 0.." +
                               std::to_string(model.period() - 1));
    }
    const int p = model.ar_order();
    Matrix block(p + 1, p + 1);
    for (const BlockTerm& t : folded_block_template(model.period(), p, k)) {
        block(t.row, t.col) += term_value(model, v, t.coef);
    }
    return block;
}

YuleWalkerSystem assemble_system(const ParmaModel& model, const PsiTable& psi) {
    const int S = model.period();
    const int p = model.ar_order();
    const int q = model.ma_order();
    if (psi.period != S) {
        throw DimensionMismatch("psi table period " + std::to_string(psi.period) +
                                " does not match model period " + std::to_string(S));
    }
    if (psi.max_k < q) {
        throw PsiTableTooShort("psi table covers k <= " + std::to_string(psi.max_k) +
                               " but the MA order is " + std::to_string(q));
    }

    const int block = p + 1;
    const int n = S * block;
    YuleWalkerSystem sys;
    sys.dimension = n;
    sys.phi_matrix = Matrix(n, n);

    // Build each offset template once, then substitute per-season coefficients.
    std::vector<std::vector<BlockTerm>> templates(S);
    for (int k = 0; k < S; ++k) {
        templates[k] = folded_block_template(S, p, k);
    }
    for (int v = 1; v <= S; ++v) {
        for (int w = 1; w <= S; ++w) {
            const int k = season_wrap(v - w + 1, S) - 1; // (v - w) mod S
            const int row0 = (v - 1) * block;
            const int col0 = (w - 1) * block;
            for (const BlockTerm& t : templates[k]) {
                sys.phi_matrix(row0 + t.row, col0 + t.col) += term_value(model, v, t.coef);
            }
        }
    }

    sys.zeta.assign(n, 0.0);
    for (int v = 1; v <= S; ++v) {
        for (int h = 0; h <= std::min(p, q); ++h) {
            double sum = 0.0;
            const int vh = season_wrap(v - h, S);
            for (int j = h; j <= q; ++j) {
                const double theta_j = j == 0 ? -1.0 : model.theta(v, j);
                sum += theta_j * psi.at(vh, j - h) * model.sigma2(season_wrap(v - j, S));
            }
            sys.zeta[(v - 1) * block + h] = -sum;
        }
    }
    return sys;
}

std::vector<double> solve_startup(const ParmaModel& model) {
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        throw NotCausal("monodromy spectral radius " + std::to_string(report.spectral_radius) +
                        " is not below 1");
    }
    const PsiTable psi = compute_psi(model, model.ma_order());
    YuleWalkerSystem sys = assemble_system(model, psi);
    return lu_solve(std::move(sys.phi_matrix), std::move(sys.zeta));
}

AutocovTable extend_autocovariances(const ParmaModel& model, const std::vector<double>& startup,
                                    const PsiTable& psi, int max_lag) {
    const int S = model.period();
    const int p = model.ar_order();
    const int q = model.ma_order();
    if (max_lag < p) {
        throw InsufficientStartup("max_lag " + std::to_string(max_lag) +
                                  " is below the AR order " + std::to_string(p));
    }
    if (static_cast<int>(startup.size()) != S * (p + 1)) {
        throw InsufficientStartup("start-up vector has length " + std::to_string(startup.size()) +
                                  ", expected " + std::to_string(S * (p + 1)));
    }
    if (psi.max_k < q) {
        throw PsiTableTooShort("psi table covers k <= " + std::to_string(psi.max_k) +
                               " but the MA order is " + std::to_string(q));
    }

    AutocovTable table;
    table.period = S;
    table.max_lag = max_lag;
    table.values.assign(static_cast<std::size_t>(S) * (max_lag + 1), 0.0);
    auto cell = [&](int v, int h) -> double& {
        return table.values[static_cast<std::size_t>(v - 1) * (max_lag + 1) + h];
    };

    for (int v = 1; v <= S; ++v) {
        for (int h = 0; h <= p; ++h) {
            cell(v, h) = startup[(v - 1) * (p + 1) + h];
        }
    }
    // For h > p every gamma_{h-j} lies at a smaller non-negative lag, so the
    // columns can be filled in increasing h.
    for (int h = p + 1; h <= max_lag; ++h) {
        for (int v = 1; v <= S; ++v) {
            double value = 0.0;
            for (int j = 1; j <= p; ++j) {
                value += model.phi(v, j) * table.gamma(season_wrap(v - j, S), h - j);
            }
            if (h <= q) {
                const int vh = season_wrap(v - h, S);
                for (int j = h; j <= q; ++j) {
                    value -= model.theta(v, j) * psi.at(vh, j - h) *
                             model.sigma2(season_wrap(v - j, S));
                }
            }
            cell(v, h) = value;
        }
    }
    return table;
}

AutocovTable compute_autocovariances(const ParmaModel& model, int max_lag) {
    if (max_lag < 0) {
        throw InvalidArgument("max_lag must be non-negative, got " + std::to_string(max_lag));
    }
    const PsiTable psi = compute_psi(model, model.ma_order());
    const std::vector<double> startup = solve_startup(model);
    AutocovTable full = extend_autocovariances(model, startup, psi,
                                               std::max(max_lag, model.ar_order()));
    if (full.max_lag == max_lag) {
        return full;
    }
    AutocovTable table;
    table.period = full.period;
    table.max_lag = max_lag;
    table.values.resize(static_cast<std::size_t>(full.period) * (max_lag + 1));
    for (int v = 1; v <= full.period; ++v) {
        for (int h = 0; h <= max_lag; ++h) {
            table.values[static_cast<std::size_t>(v - 1) * (max_lag + 1) + h] = full.gamma(v, h);
        }
    }
    return table;
}

double autocov_at(const AutocovTable& table, int v, long long h) {
    if (v < 1 || v > table.period) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(table.period));
    }
    const long long mag = h < 0 ? -h : h;
    if (mag > table.max_lag) {
        throw LagOutOfRange("lag " + std::to_string(h) + " exceeds table max_lag " +
                            std::to_string(table.max_lag));
    }
    if (h >= 0) {
        return table.gamma(v, static_cast<int>(h));
    }
    return table.gamma(season_wrap(v + mag, table.period), static_cast<int>(mag));
}

} // namespace parmacov
