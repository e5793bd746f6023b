#include "parmacov/model_io.hpp"

#include "parmacov/errors.hpp"
#include "support/subprocess.hpp"

#include <doctest.h>

using namespace parmacov;

TEST_CASE("parses a minimal white-noise model") {
    const ParmaModel model = parse_model_json(R"({"period": 1, "p": 0, "q": 0, "sigma2": [2.0]})");
    CHECK(model.period() == 1);
    CHECK(model.ar_order() == 0);
    CHECK(model.ma_order() == 0);
    CHECK(model.sigma2(1) == 2.0);
}

TEST_CASE("parses a full PARMA description") {
    const ParmaModel model = parse_model_json(R"({
        "period": 2, "p": 1, "q": 1,
        "phi": [[0.5], [0.8]],
        "theta": [[0.2], [-0.1]],
        "sigma2": [1.0, 2.5]
    })");
    CHECK(model.phi(1, 1) == 0.5);
    CHECK(model.phi(2, 1) == 0.8);
    CHECK(model.theta(2, 1) == -0.1);
    CHECK(model.sigma2(2) == 2.5);
}

TEST_CASE("rejects malformed documents with a named field") {
    CHECK_THROWS_AS(parse_model_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_model_json("[1, 2, 3]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1, "p": 0, "q": 0, "sigma2": [1.0], "mean": 0.0})"),
                         doctest::Contains("mean"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"p": 0, "q": 0, "sigma2": [1.0]})"),
                         doctest::Contains("period"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1.5, "p": 0, "q": 0, "sigma2": [1.0]})"),
                         doctest::Contains("period"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1, "p": 0, "q": 0})"),
                         doctest::Contains("sigma2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1, "p": 0, "q": 0, "sigma2": ["x"]})"),
                         doctest::Contains("sigma2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1, "p": 1, "q": 0, "sigma2": [1.0]})"),
                         doctest::Contains("phi"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model_json(R"({"period": 1, "p": 0, "q": 1, "sigma2": [1.0]})"),
                         doctest::Contains("theta"), ParseError);
    CHECK_THROWS_AS(parse_model_json(R"({"period": 1, "p": 1, "q": 0, "phi": 0.5, "sigma2": [1.0]})"),
                    ParseError);
}

TEST_CASE("model-level inconsistencies surface as validation errors") {
    CHECK_THROWS_AS(parse_model_json(R"({"period": 2, "p": 1, "q": 0,
                                         "phi": [[0.5, 0.3], [0.8, 0.1]],
                                         "sigma2": [1.0, 1.0]})"),
                    DimensionMismatch);
    CHECK_THROWS_AS(parse_model_json(R"({"period": 1, "p": 0, "q": 0, "sigma2": [-1.0]})"),
                    NonPositiveVariance);
}

TEST_CASE("loads a model from disk") {
    testsupport::ScratchDir scratch("model_io");
    const auto path = scratch.path("model.json");
    testsupport::write_file(path, R"({"period": 1, "p": 0, "q": 0, "sigma2": [4.0]})");
    const ParmaModel model = load_model_file(path.string());
    CHECK(model.sigma2(1) == 4.0);
    CHECK_THROWS_AS(load_model_file(scratch.path("absent.json").string()), ParseError);
}
