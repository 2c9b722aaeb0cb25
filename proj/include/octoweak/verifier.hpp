#pragma once

// Batch verification harness: one registered suite per identity family,
// each drawing from its own RNG stream derived from (seed, suite id).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octoweak {

struct SuiteConfig {
    std::uint64_t seed = 20240917;
    /// Overrides every suite's own sample count when set.
    std::optional<int> samples_per_suite;
    double tol_exact = 1e-12;
    double tol_series = 1e-8;
    double theta_bound = 2.0;
    int field_degree = 2;
    /// Suite ids to run; empty means all, in registration order.
    std::vector<std::string> suites;

    /// Throws std::invalid_argument on bad values and UnknownSuite on unknown ids.
    void validate() const;
};

enum class ToleranceKind {
    Exact,   ///< cfg.tol_exact
    Series,  ///< cfg.tol_series (anything going through the dexp series)
    Pinned,  ///< fixed per-suite threshold
};

struct SuiteInfo {
    std::string_view id;
    std::string_view description;
    int default_samples;
    ToleranceKind tolerance_kind;
    double pinned_tolerance;  ///< used when tolerance_kind == Pinned
    /// Negative-control threshold: the fixed witness residual must exceed it.
    std::optional<double> witness_floor;
};

struct SuiteReport {
    std::string suite_id;
    int samples = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tolerance = 0.0;
    /// Residual of the negative-control witness, for suites that carry one.
    std::optional<double> witness_residual;
    bool passed = false;
    std::int64_t elapsed_ms = 0;
};

struct RunResult {
    std::vector<SuiteReport> reports;
    int exit_code = 0;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(std::string_view id);
double suite_tolerance(const SuiteInfo& info, const SuiteConfig& cfg);

SuiteReport run_suite(std::string_view id, const SuiteConfig& cfg);
/// Runs the selected suites in parallel; reports come back in registration order.
RunResult run_all(const SuiteConfig& cfg);

std::string to_text(const std::vector<SuiteReport>& reports);
std::string to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg,
                    bool include_timing = true);

/// Reads `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);
/// Applies keys named after SuiteConfig fields. Throws std::invalid_argument on unknown keys.
void apply_config_entries(SuiteConfig& cfg, const std::map<std::string, std::string>& entries);

}  // namespace octoweak
