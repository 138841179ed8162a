#pragma once
// One experiment: spawn (or attach to) a world server, run a mission on a
// fresh VP, and collect the outcome.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <cosim/config.hpp>
#include <cosim/energy/battery.hpp>
#include <cosim/wire/transport.hpp>

namespace cosim::dse {

struct ExperimentConfig {
    std::string name;                 // row label; derived when empty
    std::string scenario = "easy";    // name resolved in the scenario dir
    std::string battery = "bitcraze_250";
    std::optional<double> weight_override_g; // equal-weight studies
    SpeedPolicy policy = SpeedPolicy::constant;
    double v_kmh = 1.0;
    std::uint64_t seed = 0;
    double max_sim_time_s = 900.0;
    std::filesystem::path out_dir = ".";
    std::optional<std::string> endpoint; // default: per-run unix socket
    bool attach = false;                 // connect to an external server
    bool write_trajectory = true;

    std::string label() const;
};

struct RunResult {
    std::string name;
    std::string scenario;
    std::string battery;
    std::optional<double> weight_override_g;
    std::string policy;
    double v_kmh = 0.0;
    std::uint64_t seed = 0;

    std::string status = "ok"; // ok | timeout | error:<what>
    double flight_time_s = 0.0;
    double consumed_soc = 0.0;
    double remaining_soc = 0.0;
    double distance_m = 0.0;
    double distance_to_gate_m = 0.0;
    bool traversed = false;
    bool collided = false;
    double time_to_gate_s = 0.0;
    double energy_motors_mj = 0.0;
    double energy_soc_mj = 0.0;
    double energy_camera_mj = 0.0;
    double energy_total_mj = 0.0; // battery output
    std::uint64_t transactions = 0;
    std::string trajectory_file;
};

// Spawned world-server child process. The binary is located through
// COSIM_WORLD_BIN, next to the current executable, or on PATH.
class WorldProcess {
public:
    WorldProcess() = default;
    ~WorldProcess();
    WorldProcess(WorldProcess&&) noexcept;
    WorldProcess& operator=(WorldProcess&&) noexcept;

    static WorldProcess spawn(const wire::Endpoint& endpoint,
                              const std::filesystem::path& scenario_dir);

    // Waits (with retries) until the server accepts a connection.
    wire::Connection connect(const wire::Registry& registry);

    void terminate();
    bool running() const { return pid_ > 0; }

private:
    int pid_ = -1;
    wire::Endpoint endpoint_;
};

std::filesystem::path find_world_binary();

RunResult run_experiment(const SystemConfig& system, const ExperimentConfig& config);

} // namespace cosim::dse
