#pragma once
// System configuration file: one JSON document declaring the modules (with
// their opcodes and power data), the world defaults, the mission, and the
// energy setup. Paths inside the file resolve relative to its directory.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <cosim/wire/registry.hpp>

namespace cosim {

struct CameraConfig {
    double rail_v = 2.8;
    double active_ma = 1.75;
    double idle_ma = 0.14;
    double frame_rate_fps = 60.0;

    std::uint64_t frame_period_us() const {
        return static_cast<std::uint64_t>(1e6 / frame_rate_fps + 0.5);
    }
};

struct SocConfig {
    double rail_v = 1.8;
    double active_ma = 280.0;
    double idle_ma = 140.0;
    double clock_mhz = 100.0;
    std::map<std::string, std::uint64_t> tasks{{"cnn_inference", 1000000}};
};

struct MotorConfig {
    double body_mass_g = 50.0; // airframe + AI deck, battery excluded
    int rotor_count = 4;
    double rotor_diameter_m = 0.045;
    double air_density = 1.225;
    double figure_of_merit = 0.585; // calibrated against hover endurance
    double eta_propel = 0.7;
};

struct WorldConfig {
    std::uint64_t step_us = 32000;
    double omega_max_rad_s = 1.0;
    double camera_hfov_deg = 80.0;
    std::string scenario_dir = "scenarios";
};

enum class SpeedPolicy { constant, adaptive };

struct MissionConfig {
    SpeedPolicy policy = SpeedPolicy::constant;
    double v_kmh = 1.0;
    std::string scenario = "easy";
    double soc_land_threshold = 0.10;
    double cruise_altitude_m = 1.0;
    double takeoff_rate_mps = 0.5;
    double yaw_gain = 0.16;        // predictor output -> motor yaw command
    double predictor_gain = 1.0;   // image offset -> predictor output
    double v_max_kmh = 1.0;        // adaptive policy parameters
    double v_floor_kmh = 0.1;
    double decrement_kmh = 0.05;
    double yaw_avg_threshold = 0.3;
    int history_len = 10;
};

struct EnergyConfig {
    std::string battery_catalog = "batteries.json";
    std::string battery = "bitcraze_250";
    double converter_efficiency = 0.90;
};

struct VpConfig {
    std::uint64_t bus_latency_us = 1;
    std::uint64_t camera_status_addr = 0x4000'0000;
    std::uint64_t frame_buffer_addr = 0x4000'1000;
    std::uint64_t motor_addr = 0x4001'0000;
};

struct SystemConfig {
    CameraConfig camera;
    SocConfig soc;
    MotorConfig motors;
    WorldConfig world;
    MissionConfig mission;
    EnergyConfig energy;
    VpConfig vp;
    wire::Registry registry = wire::Registry::builtins();
    std::filesystem::path base_dir = ".";

    static SystemConfig load(const std::filesystem::path& path); // throws ConfigError
    static SystemConfig from_json(const wire::Json& j, std::filesystem::path base_dir,
                                  std::string source);

    std::filesystem::path resolve(const std::string& relative) const;
};

SpeedPolicy speed_policy_from_string(const std::string& s);
std::string to_string(SpeedPolicy p);

} // namespace cosim
