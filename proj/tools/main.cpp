#include "parmacov/errors.hpp"
#include "parmacov/model.hpp"
#include "parmacov/model_io.hpp"
#include "parmacov/oracle.hpp"
#include "parmacov/psi.hpp"
#include "parmacov/simulate.hpp"
#include "parmacov/yule_walker.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace parmacov;

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotCausal = 2;
constexpr int kExitToleranceFailure = 3;

// Shortest representation that parses back to the same double.
std::string format_double(double x) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, result.ptr);
}

int cmd_validate(const std::string& model_path) {
    const ParmaModel model = load_model_file(model_path);
    const CausalityReport report = check_causality(model);
    std::cout << "period: " << model.period() << "\n"
              << "ar_order: " << model.ar_order() << "\n"
              << "ma_order: " << model.ma_order() << "\n"
              << "spectral_radius: " << format_double(report.spectral_radius) << "\n"
              << "causal: " << (report.is_causal ? "yes" : "no") << "\n"
              << "near_boundary: " << (report.near_boundary ? "yes" : "no") << "\n";
    return report.is_causal ? kExitOk : kExitNotCausal;
}

int cmd_psi(const std::string& model_path, int max_k) {
    const ParmaModel model = load_model_file(model_path);
    const PsiTable table = compute_psi(model, max_k);
    std::cout << "season,k,psi\n";
    for (int v = 1; v <= model.period(); ++v) {
        for (int k = 0; k <= max_k; ++k) {
            std::cout << v << ',' << k << ',' << format_double(table.at(v, k)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_acov(const std::string& model_path, int max_lag, const std::string& out_path,
             std::optional<double> check_tol) {
    const ParmaModel model = load_model_file(model_path);
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        std::cerr << "error: model is not causal (spectral radius "
                  << format_double(report.spectral_radius) << ")\n";
        return kExitNotCausal;
    }
    const AutocovTable table = compute_autocovariances(model, max_lag);

    if (check_tol.has_value()) {
        double worst = 0.0;
        try {
            for (int v = 1; v <= model.period(); ++v) {
                const double scale = std::max(1.0, std::abs(table.gamma(v, 0)));
                for (int h = 0; h <= max_lag; ++h) {
                    const double oracle = acf_ma_infinity(model, v, h, *check_tol);
                    worst = std::max(worst, std::abs(table.gamma(v, h) - oracle) / scale);
                }
            }
        } catch (const TruncationDidNotConverge& e) {
            std::cerr << "error: oracle cross-check failed: " << e.what() << "\n";
            return kExitToleranceFailure;
        }
        if (worst > *check_tol) {
            std::cerr << "error: oracle cross-check failed: max discrepancy "
                      << format_double(worst) << " exceeds " << format_double(*check_tol)
                      << "\n";
            return kExitToleranceFailure;
        }
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitInputError;
    }
    out << "season,lag,gamma\n";
    for (int v = 1; v <= model.period(); ++v) {
        for (int h = 0; h <= max_lag; ++h) {
            out << v << ',' << h << ',' << format_double(table.gamma(v, h)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_simulate(const std::string& model_path, int n_periods, int burn_in, std::uint64_t seed,
                 const std::string& out_path) {
    const ParmaModel model = load_model_file(model_path);
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        std::cerr << "error: model is not causal (spectral radius "
                  << format_double(report.spectral_radius) << ")\n";
        return kExitNotCausal;
    }
    const SimulatedSeries series = simulate(model, n_periods, burn_in, seed);

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitInputError;
    }
    out << "# seed=" << seed << " rng=" << series.rng_id << " burn_in=" << burn_in << "\n";
    out << "cycle,season,y\n";
    for (int n = 1; n <= n_periods; ++n) {
        for (int v = 1; v <= model.period(); ++v) {
            out << n << ',' << v << ',' << format_double(series.at(n, v)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& model_path, int max_lag, double tol) {
    const ParmaModel model = load_model_file(model_path);
    const CausalityReport report = check_causality(model);
    if (!report.is_causal) {
        std::cerr << "error: model is not causal (spectral radius "
                  << format_double(report.spectral_radius) << ")\n";
        return kExitNotCausal;
    }
    const PsiTable psi = compute_psi(model, model.ma_order());
    const AutocovTable table =
        compute_autocovariances(model, std::max(max_lag, model.ar_order()));
    const double residual = verify_residuals(model, table, psi);

    // The ма(infinity) oracle is run two orders of magnitude tighter than the
    // reporting tolerance so truncation noise stays out of the comparison.
    const double oracle_tol = std::max(tol * 1e-2, 1e-13);
    double discrepancy = 0.0;
    try {
        for (int v = 1; v <= model.period(); ++v) {
            const double scale = std::max(1.0, std::abs(table.gamma(v, 0)));
            for (int h = 0; h <= max_lag; ++h) {
                const double oracle = acf_ma_infinity(model, v, h, oracle_tol);
                discrepancy =
                    std::max(discrepancy, std::abs(table.gamma(v, h) - oracle) / scale);
            }
        }
    } catch (const TruncationDidNotConverge& e) {
        std::cout << "max_difference_equation_residual: " << format_double(residual) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceFailure;
    }

    std::cout << "max_difference_equation_residual: " << format_double(residual) << "\n"
              << "max_oracle_discrepancy: " << format_double(discrepancy) << "\n"
              << "tolerance: " << format_double(tol) << "\n";
    return residual <= tol && discrepancy <= tol ? kExitOk : kExitToleranceFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact per-season autocovariances of causal periodic ARMA (PARMA) models"};
    app.require_subcommand(1);

    std::string model_path;
    std::string out_path;
    int max_lag = 0;
    int max_k = 0;
    int n_periods = 0;
    int burn_in = kDefaultBurnInPeriods;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::optional<double> check_tol;

    CLI::App* validate = app.add_subcommand("validate", "Validate a model file and report causality");
    validate->add_option("--model", model_path, "Model file (JSON)")->required();

    CLI::App* psi = app.add_subcommand("psi", "Print MA(infinity) weights as CSV on stdout");
    psi->add_option("--model", model_path, "Model file (JSON)")->required();
    psi->add_option("--max-k", max_k, "Largest weight index")->required()->check(CLI::NonNegativeNumber);

    CLI::App* acov = app.add_subcommand("acov", "Write per-season autocovariances as CSV");
    acov->add_option("--model", model_path, "Model file (JSON)")->required();
    acov->add_option("--max-lag", max_lag, "Largest lag")->required()->check(CLI::NonNegativeNumber);
    acov->add_option("--out", out_path, "Output CSV path")->required();
    acov->add_option("--check-oracle", check_tol,
                     "Cross-check every value against the MA(infinity) oracle at this tolerance");

    CLI::App* sim = app.add_subcommand("simulate", "Simulate a PARMA path and write it as CSV");
    sim->add_option("--model", model_path, "Model file (JSON)")->required();
    sim->add_option("--periods", n_periods, "Number of retained full cycles")->required();
    sim->add_option("--burn-in", burn_in, "Discarded warm-up cycles");
    sim->add_option("--seed", seed, "Generator seed");
    sim->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* verify = app.add_subcommand("verify", "Check the solution against both oracles");
    verify->add_option("--model", model_path, "Model file (JSON)")->required();
    verify->add_option("--max-lag", max_lag, "Largest lag to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", tol, "Acceptance tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (app.got_subcommand(validate)) {
            return cmd_validate(model_path);
        }
        if (app.got_subcommand(psi)) {
            return cmd_psi(model_path, max_k);
        }
        if (app.got_subcommand(acov)) {
            return cmd_acov(model_path, max_lag, out_path, check_tol);
        }
        if (app.got_subcommand(sim)) {
            return cmd_simulate(model_path, n_periods, burn_in, seed, out_path);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(model_path, max_lag, tol);
        }
    } catch (const NotCausal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotCausal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
