#include <cosim/world/scenario.hpp>

#include <fstream>

#include <cosim/errors.hpp>

namespace cosim::world {

namespace {

Vec3 vec3_from_json(const wire::Json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError(std::string(what) + " must be a [x,y,z] array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

} // namespace

Scenario Scenario::from_json(const wire::Json& j) {
    Scenario s;
    s.id = j.value("id", std::string("custom"));
    if (!j.contains("gate") || !j["gate"].contains("center"))
        throw ConfigError("scenario needs gate.center");
    const auto& gate = j["gate"];
    s.gate.center = vec3_from_json(gate["center"], "gate.center");
    s.gate.opening_m = gate.value("opening_m", s.gate.opening_m);
    s.gate.frame_outer_m = gate.value("frame_outer_m", s.gate.frame_outer_m);
    s.gate.thickness_m = gate.value("thickness_m", s.gate.thickness_m);
    if (s.gate.opening_m >= s.gate.frame_outer_m)
        throw ConfigError("gate opening must be smaller than the outer frame");

    if (j.contains("start")) {
        const auto& start = j["start"];
        if (start.contains("position"))
            s.start_position = vec3_from_json(start["position"], "start.position");
        s.start_heading_rad = start.value("heading_rad", 0.0);
    }
    s.world_step_us = j.value("world_step_us", s.world_step_us);
    if (s.world_step_us == 0) throw ConfigError("world_step_us must be positive");
    s.camera.hfov_deg = j.value("camera_hfov_deg", s.camera.hfov_deg);
    if (s.camera.hfov_deg <= 0.0 || s.camera.hfov_deg >= 180.0)
        throw ConfigError("camera_hfov_deg must be in (0, 180)");
    s.omega_max_rad_s = j.value("omega_max_rad_s", s.omega_max_rad_s);
    s.noise_stddev = j.value("noise_stddev", 0.0);
    s.noise_seed = j.value("noise_seed", std::uint64_t{0});
    return s;
}

Scenario Scenario::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    wire::Json doc;
    try {
        doc = wire::Json::parse(in);
    } catch (const wire::Json::exception& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    return from_json(doc);
}

wire::Json Scenario::to_json() const {
    wire::Json j;
    j["id"] = id;
    j["gate"] = {{"center", {gate.center.x, gate.center.y, gate.center.z}},
                 {"opening_m", gate.opening_m},
                 {"frame_outer_m", gate.frame_outer_m},
                 {"thickness_m", gate.thickness_m}};
    j["start"] = {{"position", {start_position.x, start_position.y, start_position.z}},
                  {"heading_rad", start_heading_rad}};
    j["world_step_us"] = world_step_us;
    j["camera_hfov_deg"] = camera.hfov_deg;
    j["omega_max_rad_s"] = omega_max_rad_s;
    if (noise_stddev > 0.0) {
        j["noise_stddev"] = noise_stddev;
        j["noise_seed"] = noise_seed;
    }
    return j;
}

} // namespace cosim::world
