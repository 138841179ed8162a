#pragma once
// Campaign files: a JSON document expanding to a list of experiment
// configurations, executed sequentially into results.csv.

#include <filesystem>
#include <vector>

#include <cosim/dse/experiment.hpp>

namespace cosim::dse {

struct Campaign {
    std::filesystem::path system_config;
    std::vector<ExperimentConfig> runs;
};

Campaign load_campaign(const std::filesystem::path& path); // throws ConfigError

// Runs every config in order; per-run failures are recorded in the row and
// the sweep continues. Returns all rows.
std::vector<RunResult> sweep(const SystemConfig& system,
                             const std::vector<ExperimentConfig>& configs,
                             bool verbose = false);

void write_results_csv(const std::filesystem::path& path,
                       const std::vector<RunResult>& rows);
std::vector<RunResult> read_results_csv(const std::filesystem::path& path);

} // namespace cosim::dse
