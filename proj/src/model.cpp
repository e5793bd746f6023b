#include "parmacov/model.hpp"

#include "parmacov/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace parmacov {

int season_wrap(long long v, int period) noexcept {
    long long r = (v - 1) % period;
    if (r < 0) {
        r += period;
    }
    return static_cast<int>(r) + 1;
}

namespace {

void check_coefficient_rows(const std::vector<std::vector<double>>& rows, int period, int order,
                            const char* name) {
    if (static_cast<int>(rows.size()) != period) {
        throw DimensionMismatch(std::string(name) + " must have one row per season: expected " +
                                std::to_string(period) + ", got " + std::to_string(rows.size()));
    }
    for (int v = 0; v < period; ++v) {
        if (static_cast<int>(rows[v].size()) != order) {
            throw DimensionMismatch(std::string(name) + " row " + std::to_string(v + 1) +
                                    " must have " + std::to_string(order) + " entries, got " +
                                    std::to_string(rows[v].size()));
        }
        for (double c : rows[v]) {
            if (!std::isfinite(c)) {
                throw NonFiniteCoefficient(std::string(name) + " row " + std::to_string(v + 1) +
                                           " contains a non-finite entry");
            }
        }
    }
}

} // namespace

ParmaModel::ParmaModel(int period, int ar_order, int ma_order,
                       std::vector<std::vector<double>> phi,
                       std::vector<std::vector<double>> theta,
                       std::vector<double> sigma2)
    : period_(period), ar_order_(ar_order), ma_order_(ma_order),
      phi_(std::move(phi)), theta_(std::move(theta)), sigma2_(std::move(sigma2)) {
    if (period_ < 1) {
        throw InvalidArgument("period must be >= 1, got " + std::to_string(period_));
    }
    if (ar_order_ < 0 || ma_order_ < 0) {
        throw InvalidArgument("model orders must be non-negative");
    }
    if (phi_.empty() && ar_order_ == 0) {
        phi_.assign(period_, {});
    }
    if (theta_.empty() && ma_order_ == 0) {
        theta_.assign(period_, {});
    }
    check_coefficient_rows(phi_, period_, ar_order_, "phi");
    check_coefficient_rows(theta_, period_, ma_order_, "theta");
    if (static_cast<int>(sigma2_.size()) != period_) {
        throw DimensionMismatch("sigma2 must have one entry per season: expected " +
                                std::to_string(period_) + ", got " +
                                std::to_string(sigma2_.size()));
    }
    for (int v = 0; v < period_; ++v) {
        if (!std::isfinite(sigma2_[v])) {
            throw NonFiniteCoefficient("sigma2 entry " + std::to_string(v + 1) +
                                       " is not finite");
        }
        if (sigma2_[v] <= 0.0) {
            throw NonPositiveVariance("sigma2 entry " + std::to_string(v + 1) +
                                      " must be strictly positive");
        }
    }
}

Matrix companion_matrix(const ParmaModel& model, int v) {
    const int p = model.ar_order();
    if (p == 0) {
        throw ArOrderZero("companion matrix requires an AR order of at least 1");
    }
    if (v < 1 || v > model.period()) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(model.period()));
    }
    Matrix c(p, p);
    for (int j = 1; j <= p; ++j) {
        c(0, j - 1) = model.phi(v, j);
    }
    for (int i = 1; i < p; ++i) {
        c(i, i - 1) = 1.0;
    }
    return c;
}

CausalityReport check_causality(const ParmaModel& model) {
    if (model.ar_order() == 0) {
        return {0.0, true, false};
    }
    Matrix product = companion_matrix(model, model.period());
    for (int v = model.period() - 1; v >= 1; --v) {
        product = product * companion_matrix(model, v);
    }
    bool converged = true;
    const double radius = spectral_radius(std::move(product), &converged);
    return {radius, radius < 1.0, radius > 0.999 || !converged};
}

} // namespace parmacov
