#include <cosim/config.hpp>

#include <fstream>

#include <cosim/errors.hpp>

namespace cosim {

using wire::Json;

SpeedPolicy speed_policy_from_string(const std::string& s) {
    if (s == "constant") return SpeedPolicy::constant;
    if (s == "adaptive") return SpeedPolicy::adaptive;
    throw ConfigError("unknown speed policy \"" + s + "\"");
}

std::string to_string(SpeedPolicy p) {
    return p == SpeedPolicy::adaptive ? "adaptive" : "constant";
}

namespace {

const Json* module_power(const Json& j, const std::string& name) {
    if (!j.contains("modules")) return nullptr;
    for (const auto& mod : j["modules"]) {
        if (mod.value("name", std::string{}) == name && mod.contains("power"))
            return &mod["power"];
    }
    return nullptr;
}

void parse_camera(const Json* p, CameraConfig& out) {
    if (!p) return;
    out.rail_v = p->value("rail_v", out.rail_v);
    out.active_ma = p->value("active_ma", out.active_ma);
    out.idle_ma = p->value("idle_ma", out.idle_ma);
    out.frame_rate_fps = p->value("frame_rate_fps", out.frame_rate_fps);
    if (out.frame_rate_fps <= 0.0) throw ConfigError("camera frame rate must be positive");
}

void parse_soc(const Json* p, SocConfig& out) {
    if (!p) return;
    out.rail_v = p->value("rail_v", out.rail_v);
    out.active_ma = p->value("active_ma", out.active_ma);
    out.idle_ma = p->value("idle_ma", out.idle_ma);
    out.clock_mhz = p->value("clock_mhz", out.clock_mhz);
    if (out.clock_mhz <= 0.0) throw ConfigError("soc clock must be positive");
    if (p->contains("tasks")) {
        out.tasks.clear();
        for (const auto& [name, cycles] : p->at("tasks").items())
            out.tasks[name] = cycles.get<std::uint64_t>();
    }
}

void parse_motors(const Json* p, MotorConfig& out) {
    if (!p) return;
    out.body_mass_g = p->value("body_mass_g", out.body_mass_g);
    out.rotor_count = p->value("rotor_count", out.rotor_count);
    out.rotor_diameter_m = p->value("rotor_diameter_m", out.rotor_diameter_m);
    out.air_density = p->value("air_density", out.air_density);
    out.figure_of_merit = p->value("figure_of_merit", out.figure_of_merit);
    out.eta_propel = p->value("eta_propel", out.eta_propel);
    if (out.figure_of_merit <= 0.0 || out.figure_of_merit > 1.0)
        throw ConfigError("figure_of_merit must be in (0,1]");
    if (out.eta_propel <= 0.0 || out.eta_propel > 1.0)
        throw ConfigError("eta_propel must be in (0,1]");
    if (out.body_mass_g <= 0.0) throw ConfigError("body_mass_g must be positive");
}

} // namespace

SystemConfig SystemConfig::from_json(const Json& j, std::filesystem::path base_dir,
                                     std::string source) {
    SystemConfig cfg;
    cfg.base_dir = std::move(base_dir);
    cfg.registry = wire::registry_from_config(j, std::move(source));

    parse_camera(module_power(j, "camera"), cfg.camera);
    parse_soc(module_power(j, "soc"), cfg.soc);
    parse_motors(module_power(j, "motors"), cfg.motors);

    if (j.contains("world")) {
        const auto& w = j["world"];
        cfg.world.step_us = w.value("step_us", cfg.world.step_us);
        cfg.world.omega_max_rad_s = w.value("omega_max_rad_s", cfg.world.omega_max_rad_s);
        cfg.world.camera_hfov_deg = w.value("camera_hfov_deg", cfg.world.camera_hfov_deg);
        cfg.world.scenario_dir = w.value("scenario_dir", cfg.world.scenario_dir);
        if (cfg.world.step_us == 0) throw ConfigError("world step_us must be positive");
    }

    if (j.contains("mission")) {
        const auto& m = j["mission"];
        if (m.contains("policy"))
            cfg.mission.policy = speed_policy_from_string(m["policy"].get<std::string>());
        cfg.mission.v_kmh = m.value("v_kmh", cfg.mission.v_kmh);
        cfg.mission.scenario = m.value("scenario", cfg.mission.scenario);
        cfg.mission.soc_land_threshold =
            m.value("soc_land_threshold", cfg.mission.soc_land_threshold);
        cfg.mission.cruise_altitude_m =
            m.value("cruise_altitude_m", cfg.mission.cruise_altitude_m);
        cfg.mission.takeoff_rate_mps = m.value("takeoff_rate_mps", cfg.mission.takeoff_rate_mps);
        cfg.mission.yaw_gain = m.value("yaw_gain", cfg.mission.yaw_gain);
        cfg.mission.predictor_gain = m.value("predictor_gain", cfg.mission.predictor_gain);
        cfg.mission.v_max_kmh = m.value("v_max_kmh", cfg.mission.v_max_kmh);
        cfg.mission.v_floor_kmh = m.value("v_floor_kmh", cfg.mission.v_floor_kmh);
        cfg.mission.decrement_kmh = m.value("decrement_kmh", cfg.mission.decrement_kmh);
        cfg.mission.yaw_avg_threshold =
            m.value("yaw_avg_threshold", cfg.mission.yaw_avg_threshold);
        cfg.mission.history_len = m.value("history_len", cfg.mission.history_len);
        if (cfg.mission.takeoff_rate_mps <= 0.0)
            throw ConfigError("takeoff_rate_mps must be positive");
        if (cfg.mission.history_len <= 0) throw ConfigError("history_len must be positive");
    }

    if (j.contains("energy")) {
        const auto& e = j["energy"];
        cfg.energy.battery_catalog = e.value("battery_catalog", cfg.energy.battery_catalog);
        cfg.energy.battery = e.value("battery", cfg.energy.battery);
        cfg.energy.converter_efficiency =
            e.value("converter_efficiency", cfg.energy.converter_efficiency);
    }

    if (j.contains("vp")) {
        const auto& v = j["vp"];
        cfg.vp.bus_latency_us = v.value("bus_latency_us", cfg.vp.bus_latency_us);
        cfg.vp.camera_status_addr = v.value("camera_status_addr", cfg.vp.camera_status_addr);
        cfg.vp.frame_buffer_addr = v.value("frame_buffer_addr", cfg.vp.frame_buffer_addr);
        cfg.vp.motor_addr = v.value("motor_addr", cfg.vp.motor_addr);
    }

    return cfg;
}

SystemConfig SystemConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    return from_json(doc, path.parent_path(), path.string());
}

std::filesystem::path SystemConfig::resolve(const std::string& relative) const {
    std::filesystem::path p(relative);
    if (p.is_absolute()) return p;
    return base_dir / p;
}

} // namespace cosim
