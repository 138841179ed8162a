#pragma once
// Mission state machine running on the VP: takeoff to cruise altitude,
// cruise toward the gate under the yaw predictor and speed policy, land
// after traversal or when the battery reaches the landing threshold.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <cosim/mission/policy.hpp>
#include <cosim/mission/predictor.hpp>
#include <cosim/vp/platform.hpp>

namespace cosim::mission {

enum class MissionPhase { Takeoff, Cruise, Land, Done };

std::string to_string(MissionPhase p);

struct WorldTelemetry {
    double x = 0, y = 0, z = 0;
    double heading_rad = 0;
    bool airborne = false;
    bool traversed = false;
    bool collided = false;
    std::uint64_t world_time_us = 0;
    std::uint64_t traversal_time_us = 0;
    double traversal_distance_m = 0;
    double distance_m = 0;
    std::uint64_t steps_total = 0;
    std::uint64_t last_frame_hash = 0;
};

class Mission {
public:
    Mission(vp::Platform& vp, const MissionConfig& cfg);

    // One control iteration: capture, downsample + predict (charged as the
    // cnn_inference task), speed policy, motor command, telemetry poll and
    // phase transitions. The loop period emerges from the camera frame time
    // plus the inference time; there is no artificial sleep.
    void step();

    bool done() const { return phase_ == MissionPhase::Done; }
    MissionPhase phase() const { return phase_; }
    const std::vector<std::pair<MissionPhase, std::uint64_t>>& transitions() const {
        return transitions_;
    }
    const WorldTelemetry& telemetry() const { return telemetry_; }
    double last_prediction() const { return predictor_.last_prediction(); }
    std::uint64_t iterations() const { return iterations_; }

private:
    void enter(MissionPhase next);
    WorldTelemetry poll_state();
    void command(double v_mps, double yaw, double vz);

    vp::Platform& vp_;
    MissionConfig cfg_;
    YawPredictor predictor_;
    SpeedController speed_;
    MissionPhase phase_ = MissionPhase::Takeoff;
    std::vector<std::pair<MissionPhase, std::uint64_t>> transitions_;
    WorldTelemetry telemetry_;
    std::uint64_t iterations_ = 0;
    bool first_step_ = true;
};

} // namespace cosim::mission
