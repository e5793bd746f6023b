#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parmacov/errors.hpp"
#include "parmacov/matrix.hpp"
#include "parmacov/model.hpp"
#include "parmacov/model_io.hpp"
#include "parmacov/oracle.hpp"
#include "parmacov/psi.hpp"
#include "parmacov/rng.hpp"
#include "parmacov/simulate.hpp"
#include "parmacov/yule_walker.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace parmacov;

namespace {

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

void check_season_range(int v, int period) {
    if (v < 1 || v > period) {
        throw SeasonOutOfRange("season " + std::to_string(v) + " outside 1.." +
                               std::to_string(period));
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact per-season autocovariances of causal periodic ARMA (PARMA) models";

    const auto base = py::register_exception<Error>(m, "ParmaError");
    py::register_exception<NotCausal>(m, "NotCausalError", base.ptr());

    py::class_<ParmaModel>(m, "ParmaModel",
                           "Periodic ARMA model y_t = sum phi_j^(v) y_(t-j) + e_t - "
                           "sum theta_j^(v) e_(t-j) with per-season innovation variances. "
                           "Validated on construction and immutable afterwards.")
        .def(py::init([](int period, int p, int q, std::vector<double> sigma2,
                         std::vector<std::vector<double>> phi,
                         std::vector<std::vector<double>> theta) {
                 return ParmaModel(period, p, q, std::move(phi), std::move(theta),
                                   std::move(sigma2));
             }),
             py::arg("period"), py::arg("p"), py::arg("q"), py::arg("sigma2"),
             py::arg("phi") = std::vector<std::vector<double>>{},
             py::arg("theta") = std::vector<std::vector<double>>{})
        .def_property_readonly("period", &ParmaModel::period)
        .def_property_readonly("ar_order", &ParmaModel::ar_order)
        .def_property_readonly("ma_order", &ParmaModel::ma_order)
        .def_property_readonly("phi", &ParmaModel::ar_coefficients)
        .def_property_readonly("theta", &ParmaModel::ma_coefficients)
        .def_property_readonly("sigma2", &ParmaModel::variances)
        .def("__eq__",
             [](const ParmaModel& a, const ParmaModel& b) { return a == b; })
        .def("__repr__", [](const ParmaModel& model) {
            std::ostringstream os;
            os << "ParmaModel(period=" << model.period() << ", p=" << model.ar_order()
               << ", q=" << model.ma_order() << ")";
            return os.str();
        });

    py::class_<CausalityReport>(m, "CausalityReport")
        .def_readonly("spectral_radius", &CausalityReport::spectral_radius)
        .def_readonly("is_causal", &CausalityReport::is_causal)
        .def_readonly("near_boundary", &CausalityReport::near_boundary)
        .def("__repr__", [](const CausalityReport& r) {
            std::ostringstream os;
            os << "CausalityReport(spectral_radius=" << r.spectral_radius
               << ", is_causal=" << (r.is_causal ? "True" : "False")
               << ", near_boundary=" << (r.near_boundary ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<PsiTable>(m, "PsiTable", "Causal MA(infinity) weights psi_k^(v).")
        .def_readonly("period", &PsiTable::period)
        .def_readonly("max_k", &PsiTable::max_k)
        .def("at",
             [](const PsiTable& table, int v, int k) {
                 check_season_range(v, table.period);
                 if (k < 0 || k > table.max_k) {
                     throw LagOutOfRange("k " + std::to_string(k) + " outside 0.." +
                                         std::to_string(table.max_k));
                 }
                 return table.at(v, k);
             },
             py::arg("v"), py::arg("k"))
        .def_property_readonly("values", [](const PsiTable& table) {
            std::vector<std::vector<double>> rows(table.period);
            for (int v = 1; v <= table.period; ++v) {
                rows[v - 1].assign(table.values.begin() + (v - 1) * (table.max_k + 1),
                                   table.values.begin() + v * (table.max_k + 1));
            }
            return rows;
        });

    py::class_<AutocovTable>(m, "AutocovTable", "Per-season autocovariances gamma_h^(v).")
        .def_readonly("period", &AutocovTable::period)
        .def_readonly("max_lag", &AutocovTable::max_lag)
        .def("gamma",
             [](const AutocovTable& table, int v, int h) {
                 check_season_range(v, table.period);
                 if (h < 0 || h > table.max_lag) {
                     throw LagOutOfRange("lag " + std::to_string(h) + " outside 0.." +
                                         std::to_string(table.max_lag));
                 }
                 return table.gamma(v, h);
             },
             py::arg("v"), py::arg("h"))
        .def("at",
             [](const AutocovTable& table, int v, long long h) { return autocov_at(table, v, h); },
             py::arg("v"), py::arg("h"),
             "Autocovariance at any integer lag; negative lags use "
             "gamma_(-h)^(v) = gamma_h^(v+h).")
        .def_property_readonly("values", [](const AutocovTable& table) {
            std::vector<std::vector<double>> rows(table.period);
            for (int v = 1; v <= table.period; ++v) {
                rows[v - 1].assign(table.values.begin() + (v - 1) * (table.max_lag + 1),
                                   table.values.begin() + v * (table.max_lag + 1));
            }
            return rows;
        });

    py::class_<YuleWalkerSystem>(m, "YuleWalkerSystem",
                                 "The block system whose solution is the start-up "
                                 "autocovariance vector.")
        .def_readonly("dimension", &YuleWalkerSystem::dimension)
        .def_readonly("zeta", &YuleWalkerSystem::zeta)
        .def_property_readonly("phi_matrix", [](const YuleWalkerSystem& sys) {
            return matrix_rows(sys.phi_matrix);
        });

    py::enum_<NoiseKind>(m, "NoiseKind")
        .value("gaussian", NoiseKind::gaussian)
        .value("rademacher", NoiseKind::rademacher);

    py::class_<SimulatedSeries>(m, "SimulatedSeries")
        .def_readonly("period", &SimulatedSeries::period)
        .def_readonly("n_periods", &SimulatedSeries::n_periods)
        .def_readonly("data", &SimulatedSeries::data)
        .def_readonly("seed", &SimulatedSeries::seed)
        .def_readonly("rng_id", &SimulatedSeries::rng_id)
        .def("at",
             [](const SimulatedSeries& series, int cycle, int v) {
                 check_season_range(v, series.period);
                 if (cycle < 1 || cycle > series.n_periods) {
                     throw LagOutOfRange("cycle " + std::to_string(cycle) + " outside 1.." +
                                         std::to_string(series.n_periods));
                 }
                 return series.at(cycle, v);
             },
             py::arg("cycle"), py::arg("v"));

    m.def("season_wrap", &season_wrap, py::arg("v"), py::arg("period"),
          "Wraps an arbitrary integer season index onto 1..period.");
    m.def("companion_matrix",
          [](const ParmaModel& model, int v) { return matrix_rows(companion_matrix(model, v)); },
          py::arg("model"), py::arg("v"));
    m.def("check_causality", &check_causality, py::arg("model"),
          "Spectral radius of the one-period companion product and verdict.");
    m.def("compute_psi", &compute_psi, py::arg("model"), py::arg("max_k"),
          "Weights of the causal MA(infinity) representation up to max_k.");
    m.def("phi_block",
          [](const ParmaModel& model, int v, int h) { return matrix_rows(phi_block(model, v, h)); },
          py::arg("model"), py::arg("v"), py::arg("h"));
    m.def("folded_phi_block",
          [](const ParmaModel& model, int v, int k) {
              return matrix_rows(folded_phi_block(model, v, k));
          },
          py::arg("model"), py::arg("v"), py::arg("k"));
    m.def("assemble_system", &assemble_system, py::arg("model"), py::arg("psi"));
    m.def("solve_startup", &solve_startup, py::arg("model"),
          "Start-up autocovariances (gamma_0^(1)..gamma_p^(1), gamma_0^(2), ...).");
    m.def("extend_autocovariances", &extend_autocovariances, py::arg("model"), py::arg("startup"),
          py::arg("psi"), py::arg("max_lag"));
    m.def("compute_autocovariances", &compute_autocovariances, py::arg("model"),
          py::arg("max_lag"), "Full pipeline: psi weights, start-up solve, lag extension.");
    m.def("autocov_at", &autocov_at, py::arg("table"), py::arg("v"), py::arg("h"));
    m.def("acf_ma_infinity", &acf_ma_infinity, py::arg("model"), py::arg("v"), py::arg("h"),
          py::arg("tol") = 1e-12,
          "Independent autocovariance oracle from the truncated MA(infinity) sum.");
    m.def("simulate", &simulate, py::arg("model"), py::arg("n_periods"),
          py::arg("burn_in_periods") = kDefaultBurnInPeriods, py::arg("seed") = 0,
          py::arg("noise") = NoiseKind::gaussian);
    m.def("sample_periodic_acov", &sample_periodic_acov, py::arg("series"), py::arg("v"),
          py::arg("h"), py::arg("center") = false);
    m.def("verify_residuals", &verify_residuals, py::arg("model"), py::arg("table"),
          py::arg("psi"),
          "Largest violation of the defining difference equation over the table.");
    m.def("substream_seed", &substream_seed, py::arg("seed"), py::arg("index"));
    m.def("parse_model_json", &parse_model_json, py::arg("text"));
    m.def("load_model_file", &load_model_file, py::arg("path"));
}
