#pragma once

#include <parahiggs/poly.hpp>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parahiggs::cli {

struct ScenarioConfig {
    Poly curve_f;
    std::vector<std::pair<Rat, Rat>> marked_points;
    std::vector<long> lambda;
    /// Jet order used by the bridge suite's globality test.
    int series_precision = 6;
    /// Depths for the truncated Verma quotients; the largest also bounds
    /// the degree of the centrality sweep.
    std::vector<int> truncation_depths{0, 1, 2};
    /// Random draws allowed when searching for a smooth spectral curve.
    std::size_t search_budget = 200;
    /// Random Higgs fields / spectral samples per suite.
    int samples = 10;
    std::uint64_t seed = 1;
    /// nullopt: every suite.
    std::optional<std::vector<std::string>> suites;
};

/// Throws MathError(ConfigInvalid) on malformed or inconsistent input.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

/// Fixed report order.
const std::vector<std::string>& all_suites();

struct RunResult {
    nlohmann::json report;
    bool passed = true;
};

/// Runs the named suites in the fixed order; log receives one line per
/// suite when non-null.
RunResult run_suites(const ScenarioConfig& config, const std::vector<std::string>& suites, std::ostream* log = nullptr);

/// Copy of a report with every "seconds" field removed.
nlohmann::json strip_timings(nlohmann::json report);

struct RunOptions {
    std::string config_path;
    std::string output_path;  // empty: stdout
    std::vector<std::string> suites;  // empty: the config's selection
    std::optional<std::uint64_t> seed;
    bool verbose = false;
};

/// 0 all selected suites pass, 1 some suite fails, 2 invalid config.
int run(const RunOptions& opts, std::ostream& err);

}  // namespace parahiggs::cli
