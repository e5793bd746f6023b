#include "parmacov/model_io.hpp"

#include "parmacov/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace parmacov {

namespace {

using nlohmann::json;

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    const json& value = doc.at(key);
    if (!value.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer");
    }
    return value.get<int>();
}

std::vector<double> number_row(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw ParseError("field '" + where + "' must be an array of numbers");
    }
    std::vector<double> row;
    row.reserve(value.size());
    for (const json& entry : value) {
        if (!entry.is_number()) {
            throw ParseError("field '" + where + "' contains a non-numeric entry");
        }
        row.push_back(entry.get<double>());
    }
    return row;
}

std::vector<std::vector<double>> coefficient_rows(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        return {};
    }
    const json& value = doc.at(key);
    if (!value.is_array()) {
        throw ParseError(std::string("field '") + key + "' must be an array of per-season rows");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(value.size());
    for (std::size_t v = 0; v < value.size(); ++v) {
        rows.push_back(number_row(value[v], std::string(key) + "[" + std::to_string(v) + "]"));
    }
    return rows;
}

} // namespace

ParmaModel parse_model_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("model description must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "period" && key != "p" && key != "q" && key != "phi" && key != "theta" &&
            key != "sigma2") {
            throw ParseError("unknown field '" + key + "'");
        }
    }

    const int period = require_int(doc, "period");
    const int p = require_int(doc, "p");
    const int q = require_int(doc, "q");
    if (!doc.contains("sigma2")) {
        throw ParseError("missing field 'sigma2'");
    }
    std::vector<double> sigma2 = number_row(doc.at("sigma2"), "sigma2");
    std::vector<std::vector<double>> phi = coefficient_rows(doc, "phi");
    std::vector<std::vector<double>> theta = coefficient_rows(doc, "theta");
    if (p > 0 && phi.empty()) {
        throw ParseError("missing field 'phi' for a model with p > 0");
    }
    if (q > 0 && theta.empty()) {
        throw ParseError("missing field 'theta' for a model with q > 0");
    }
    return ParmaModel(period, p, q, std::move(phi), std::move(theta), std::move(sigma2));
}

ParmaModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open model file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_json(buffer.str());
}

} // namespace parmacov
