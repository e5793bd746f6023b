#pragma once

#include "parmacov/model.hpp"

#include <string>

namespace parmacov {

/**
 * Parses a JSON model description of the form
 *
 *   {
 *     "period": 2, "p": 1, "q": 0,
 *     "phi": [[0.5], [0.8]],
 *     "theta": [],
 *     "sigma2": [1.0, 1.0]
 *   }
 *
 * `phi`/`theta` hold one row per season (row v-1 is season v, column j-1 is
 * order j) and may be omitted when the matching order is zero. Coefficients
 * follow the convention
 *   y_t = sum phi_j^(v) y_{t-j} + e_t - sum theta_j^(v) e_{t-j}.
 * Unknown fields are rejected. Throws ParseError for malformed documents and
 * the model validation errors for inconsistent values.
 */
ParmaModel parse_model_json(const std::string& text);

/// Reads and parses a model file; ParseError when the path is unreadable.
ParmaModel load_model_file(const std::string& path);

} // namespace parmacov
