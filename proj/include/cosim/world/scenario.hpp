#pragma once
// Scenario description for the world process: gate geometry, drone start
// pose, physics timestep, camera intrinsics, optional rendering noise.
// Loaded from a JSON file or passed inline in a RESET payload.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <cosim/wire/packet.hpp>

namespace cosim::world {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    double norm_xy() const { return std::hypot(x, y); }
};

// Square gate in a plane of constant x (normal along +x). The opening is a
// centered square hole in a square frame.
struct GateSpec {
    Vec3 center;                 // center of the opening
    double opening_m = 0.40;     // inner square side
    double frame_outer_m = 0.60; // outer square side
    double thickness_m = 0.03;   // frame depth along the normal

    double opening_half() const { return opening_m / 2.0; }
    double frame_half() const { return frame_outer_m / 2.0; }
};

struct CameraIntrinsics {
    int width = 320;
    int height = 320;
    double hfov_deg = 80.0;

    double focal_px() const {
        return (width / 2.0) / std::tan(hfov_deg * M_PI / 180.0 / 2.0);
    }
};

struct Scenario {
    std::string id = "easy";
    GateSpec gate;
    Vec3 start_position;
    double start_heading_rad = 0.0;
    std::uint64_t world_step_us = 32000;
    CameraIntrinsics camera;
    double omega_max_rad_s = 1.0;     // heading rate at |yaw command| = 1
    double noise_stddev = 0.0;        // Gaussian pixel noise, 0 = off
    std::uint64_t noise_seed = 0;

    static Scenario from_json(const wire::Json& j);            // throws ConfigError
    static Scenario load(const std::filesystem::path& path);   // throws ConfigError
    wire::Json to_json() const;
};

} // namespace cosim::world
