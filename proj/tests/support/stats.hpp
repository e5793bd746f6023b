#pragma once

#include "parmacov/simulate.hpp"

#include <cmath>
#include <vector>

namespace testsupport {

struct BatchEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample autocovariance at (v, h) with a batch-mean standard error: the
/// per-cycle products are split into n_batches equal batches (trailing
/// remainder dropped) and the spread of the batch means estimates the error
/// of the overall mean.
inline BatchEstimate batched_sample_acov(const parmacov::SimulatedSeries& series, int v, int h,
                                         int n_batches = 20) {
    const int S = series.period;
    std::vector<double> products;
    products.reserve(series.n_periods);
    for (int n = 1; n <= series.n_periods; ++n) {
        const long long idx = static_cast<long long>(n - 1) * S + (v - 1);
        const long long lagged = idx - h;
        if (lagged < 0) {
            continue;
        }
        products.push_back(series.data[idx] * series.data[lagged]);
    }

    const std::size_t batch_size = products.size() / n_batches;
    std::vector<double> batch_means(n_batches, 0.0);
    for (int b = 0; b < n_batches; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < batch_size; ++i) {
            sum += products[b * batch_size + i];
        }
        batch_means[b] = sum / static_cast<double>(batch_size);
    }

    double mean = 0.0;
    for (double m : batch_means) {
        mean += m;
    }
    mean /= n_batches;
    double var = 0.0;
    for (double m : batch_means) {
        var += (m - mean) * (m - mean);
    }
    var /= (n_batches - 1);
    return {mean, std::sqrt(var / n_batches)};
}

} // namespace testsupport
