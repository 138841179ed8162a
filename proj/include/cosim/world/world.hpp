#pragma once
// The world simulation owned by the server process: drone kinematics, gate
// events, camera rendering, trajectory logging, opcode dispatch.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include <cosim/wire/packet.hpp>
#include <cosim/world/physics.hpp>
#include <cosim/world/render.hpp>
#include <cosim/world/scenario.hpp>

namespace cosim::world {

class World {
public:
    explicit World(Scenario scenario);

    void reset(Scenario scenario, std::optional<std::string> trajectory_path);

    // Runs n physics ticks, classifying gate events after each.
    void advance(std::uint64_t steps);

    void set_motor(double v_mps, double yaw_rate, double vz_mps);

    Image render();

    std::uint64_t time_us() const { return time_us_; }
    std::uint64_t steps_total() const { return steps_total_; }
    const DroneState& drone() const { return drone_; }
    const Scenario& scenario() const { return scenario_; }

    bool traversed() const { return traversed_; }
    bool collided() const { return collided_; }
    double distance_m() const { return distance_m_; }

    // Telemetry payload for GET_STATE.
    wire::Json state_json() const;

private:
    void apply_collision_skid(const DroneState& prev);
    void log_row(const char* event);

    Scenario scenario_;
    DroneState drone_;
    std::uint64_t time_us_ = 0;
    std::uint64_t steps_total_ = 0;

    bool traversed_ = false;
    bool collided_ = false;
    std::uint64_t traversal_time_us_ = 0;
    double traversal_distance_m_ = 0.0;
    double distance_m_ = 0.0;
    std::uint64_t last_frame_hash_ = 0;

    std::ofstream trajectory_;
};

// Executes one request against the world; never throws on bad input, bad
// requests come back as status:"error" responses.
wire::Packet dispatch(World& world, const wire::Packet& request,
                      const std::optional<std::filesystem::path>& scenario_dir);

} // namespace cosim::world
