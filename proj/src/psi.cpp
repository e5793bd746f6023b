#include "parmacov/psi.hpp"

#include "parmacov/errors.hpp"

#include <algorithm>
#include <string>

namespace parmacov {

PsiTable compute_psi(const ParmaModel& model, int max_k) {
    if (max_k < 0) {
        throw InvalidArgument("max_k must be non-negative, got " + std::to_string(max_k));
    }
    const int S = model.period();
    const int p = model.ar_order();
    const int q = model.ma_order();

    PsiTable table;
    table.period = S;
    table.max_k = max_k;
    table.values.assign(static_cast<std::size_t>(S) * (max_k + 1), 0.0);

    auto cell = [&](int v, int k) -> double& {
        return table.values[static_cast<std::size_t>(v - 1) * (max_k + 1) + k];
    };
    for (int v = 1; v <= S; ++v) {
        cell(v, 0) = 1.0;
    }
    // Increasing k keeps every psi_{k-j}^(v-j) dependency already computed.
    for (int k = 1; k <= max_k; ++k) {
        for (int v = 1; v <= S; ++v) {
            double value = k <= q ? -model.theta(v, k) : 0.0;
            const int jmax = std::min(k, p);
            for (int j = 1; j <= jmax; ++j) {
                value += model.phi(v, j) * table.at(season_wrap(v - j, S), k - j);
            }
            cell(v, k) = value;
        }
    }
    return table;
}

} // namespace parmacov
