#pragma once
// Post-processing of sweep results: battery-vs-baseline SoC savings and
// flight-time extensions, and speed-strategy comparisons (time to gate,
// remaining charge, path length) against the adaptive policy.

#include <optional>
#include <string>
#include <vector>

#include <cosim/dse/experiment.hpp>

namespace cosim::dse {

struct SocSaving {
    std::string scenario;
    double v_kmh = 0.0;
    bool equal_weight = false;
    std::string battery;
    std::string baseline;
    double consumed = 0.0;
    double baseline_consumed = 0.0;
    double savings_pct = 0.0; // (baseline - candidate) / baseline * 100
};

struct FlightTimeExtension {
    std::string battery;
    std::string baseline;
    double flight_time_s = 0.0;
    double baseline_flight_time_s = 0.0;
    double extension_pct = 0.0;
    double extra_time_s = 0.0;
};

struct StrategyComparison {
    std::string scenario;
    std::string strategy; // "adaptive" or "constant <v> km/h"
    double v_kmh = 0.0;
    bool traversed = false;
    bool collided = false;
    double time_to_gate_s = 0.0;
    double remaining_soc = 0.0;
    double distance_to_gate_m = 0.0;
    // vs the adaptive run of the same scenario (when both traversed)
    std::optional<double> adaptive_time_improvement_pct;
    std::optional<double> distance_delta_pct;
};

struct Report {
    std::vector<SocSaving> soc_savings;
    std::vector<FlightTimeExtension> flight_time;
    std::vector<StrategyComparison> strategies;
};

// Throws ConfigError when a needed baseline run is missing, naming it.
Report build_report(const std::vector<RunResult>& rows,
                    const std::string& baseline_battery = "bitcraze_250");

wire::Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

double pct_delta(double candidate, double baseline);

} // namespace cosim::dse
