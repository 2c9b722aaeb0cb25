// octoweak: run the identity verification suites from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "octoweak/errors.hpp"
#include "octoweak/octonion.hpp"
#include "octoweak/verifier.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for complexified-octonion electroweak identities"};

    std::string config_path;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol_exact = 0.0;
    double tol_series = 0.0;
    double theta_bound = 0.0;
    int field_degree = 0;
    std::vector<std::string> suites;
    std::string report_format = "text";
    std::string out_path;
    bool list_suites = false;
    bool dump_table = false;
    bool no_timing = false;

    app.add_option("--config", config_path, "key = value file mirroring the config fields")->check(CLI::ExistingFile);
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed (falls back to $OCTOWEAK_SEED)");
    auto* samples_opt = app.add_option("--samples", samples, "samples per suite (default: per-suite)")
                            ->check(CLI::PositiveNumber);
    auto* tol_exact_opt = app.add_option("--tol-exact", tol_exact, "tolerance for exact-algebra suites")
                              ->check(CLI::PositiveNumber);
    auto* tol_series_opt = app.add_option("--tol-series", tol_series, "tolerance for series-backed suites")
                               ->check(CLI::PositiveNumber);
    auto* theta_opt = app.add_option("--theta-bound", theta_bound, "bound on |θ^μν| in Lorentz sweeps")
                          ->check(CLI::PositiveNumber);
    auto* degree_opt = app.add_option("--field-degree", field_degree, "total degree of sampled fields")
                           ->check(CLI::Range(0, 3));
    auto* suite_opt = app.add_option("--suite", suites, "suite id to run (repeatable)");
    app.add_option("--report", report_format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag("--no-timing", no_timing, "omit elapsed_ms from the JSON report");
    app.add_flag("--list-suites", list_suites, "list registered suites and exit");
    app.add_flag("--dump-table", dump_table, "print the 8x8 multiplication table and exit");

    CLI11_PARSE(app, argc, argv);

    if (dump_table) {
        std::cout << octoweak::format_structure_table();
        return 0;
    }
    if (list_suites) {
        for (const auto& info : octoweak::suite_registry()) {
            std::cout << info.id << "\t" << info.description << '\n';
        }
        return 0;
    }

    octoweak::SuiteConfig cfg;
    try {
        if (const char* env = std::getenv("OCTOWEAK_SEED")) {
            octoweak::apply_config_entries(cfg, {{"seed", env}});
        }
        if (!config_path.empty()) {
            octoweak::apply_config_entries(cfg, octoweak::read_config_file(config_path));
        }
        if (*seed_opt) cfg.seed = seed;
        if (*samples_opt) cfg.samples_per_suite = samples;
        if (*tol_exact_opt) cfg.tol_exact = tol_exact;
        if (*tol_series_opt) cfg.tol_series = tol_series;
        if (*theta_opt) cfg.theta_bound = theta_bound;
        if (*degree_opt) cfg.field_degree = field_degree;
        if (*suite_opt) cfg.suites = suites;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "octoweak: " << e.what() << '\n';
        return kUsageError;
    }

    const octoweak::RunResult result = octoweak::run_all(cfg);
    const std::string report = report_format == "json" ? octoweak::to_json(result.reports, cfg, !no_timing)
                                                       : octoweak::to_text(result.reports);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "octoweak: cannot write " << out_path << '\n';
            return kUsageError;
        }
        out << report;
    }
    return result.exit_code;
}
