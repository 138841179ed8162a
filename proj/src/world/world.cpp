#include <cosim/world/world.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <cosim/errors.hpp>

namespace cosim::world {

World::World(Scenario scenario) { reset(std::move(scenario), std::nullopt); }

void World::reset(Scenario scenario, std::optional<std::string> trajectory_path) {
    scenario_ = std::move(scenario);
    drone_ = DroneState{};
    drone_.position = scenario_.start_position;
    drone_.heading_rad = scenario_.start_heading_rad;
    time_us_ = 0;
    steps_total_ = 0;
    traversed_ = false;
    collided_ = false;
    traversal_time_us_ = 0;
    traversal_distance_m_ = 0.0;
    distance_m_ = 0.0;
    last_frame_hash_ = 0;

    trajectory_.close();
    trajectory_.clear();
    if (trajectory_path) {
        trajectory_.open(*trajectory_path, std::ios::trunc);
        if (!trajectory_)
            throw ConfigError("cannot open trajectory log " + *trajectory_path);
        trajectory_ << "world_time_us,x,y,z,heading,v_cmd,event\n";
        log_row("reset");
    }
}

void World::log_row(const char* event) {
    if (!trajectory_.is_open()) return;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%s\n",
                  static_cast<unsigned long long>(time_us_), drone_.position.x,
                  drone_.position.y, drone_.position.z, drone_.heading_rad, drone_.v_cmd_mps,
                  event);
    trajectory_ << buf;
}

void World::apply_collision_skid(const DroneState& prev) {
    // Glancing impact on the frame: the drone scrubs off sideways along the
    // structure and settles squared up just in front of the plane.
    const GateSpec& g = scenario_.gate;
    const double margin = g.opening_half() - 0.06;
    const bool from_front = prev.position.x <= g.center.x;
    const double standoff = g.thickness_m / 2.0 + 0.02;

    drone_.position.x = g.center.x + (from_front ? -standoff : standoff);
    drone_.position.y =
        g.center.y + std::clamp(drone_.position.y - g.center.y, -margin, margin);
    drone_.position.z =
        g.center.z + std::clamp(drone_.position.z - g.center.z, -margin, margin);
    drone_.heading_rad = from_front ? 0.0 : M_PI;
}

void World::advance(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) {
        const DroneState prev = drone_;
        drone_ = physics_step(prev, scenario_.world_step_us, scenario_.omega_max_rad_s);
        time_us_ += scenario_.world_step_us;
        steps_total_ += 1;
        distance_m_ += std::hypot(drone_.position.x - prev.position.x,
                                  drone_.position.y - prev.position.y);

        const char* event = "";
        if (!prev.airborne && drone_.airborne) event = "liftoff";
        if (prev.airborne && !drone_.airborne) event = "touchdown";

        switch (check_traversal(prev, drone_, scenario_.gate)) {
        case TraversalEvent::traversed:
            if (!traversed_) {
                traversed_ = true;
                traversal_time_us_ = time_us_;
                traversal_distance_m_ = distance_m_;
            }
            event = "traversed";
            break;
        case TraversalEvent::collided:
            collided_ = true;
            apply_collision_skid(prev);
            event = "collided";
            break;
        case TraversalEvent::none:
            break;
        }
        log_row(event);
    }
}

void World::set_motor(double v_mps, double yaw_rate, double vz_mps) {
    if (v_mps < 0.0) throw std::domain_error("commanded speed must be >= 0");
    if (yaw_rate < -1.0 || yaw_rate > 1.0)
        throw std::domain_error("yaw rate command outside [-1, 1]");
    drone_.v_cmd_mps = v_mps;
    drone_.yaw_rate_cmd = yaw_rate;
    drone_.vz_cmd_mps = vz_mps;
}

Image World::render() {
    Image img = render_camera(drone_, scenario_);
    last_frame_hash_ = image_hash(img);
    return img;
}

wire::Json World::state_json() const {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(last_frame_hash_));
    return wire::Json{{"x", drone_.position.x},
                      {"y", drone_.position.y},
                      {"z", drone_.position.z},
                      {"heading_rad", drone_.heading_rad},
                      {"v_cmd_mps", drone_.v_cmd_mps},
                      {"airborne", drone_.airborne},
                      {"world_time_us", time_us_},
                      {"steps_total", steps_total_},
                      {"traversed", traversed_},
                      {"collided", collided_},
                      {"traversal_time_us", traversal_time_us_},
                      {"traversal_distance_m", traversal_distance_m_},
                      {"distance_m", distance_m_},
                      {"scenario", scenario_.id},
                      {"last_frame_hash", hash}};
}

wire::Packet dispatch(World& world, const wire::Packet& request,
                      const std::optional<std::filesystem::path>& scenario_dir) {
    try {
        const std::string& op = request.opcode;

        if (op == wire::kOpGetData) {
            const Image img = world.render();
            wire::Json payload{{"format", "gray8"},
                               {"width", img.width},
                               {"height", img.height},
                               {"data", wire::base64_encode(img.pixels)}};
            return wire::make_response(request, world.time_us(), std::move(payload));
        }

        if (op == wire::kOpSetMotor) {
            if (!request.payload)
                return wire::make_error_response(request, world.time_us(),
                                                 "SET_MOTOR needs a payload");
            const auto& p = *request.payload;
            world.set_motor(p.at("v_mps").get<double>(), p.at("yaw_rate").get<double>(),
                            p.at("vz_mps").get<double>());
            return wire::make_response(request, world.time_us());
        }

        if (op == wire::kOpAdvance) {
            if (!request.payload || !request.payload->contains("steps"))
                return wire::make_error_response(request, world.time_us(),
                                                 "ADVANCE needs {steps}");
            world.advance((*request.payload)["steps"].get<std::uint64_t>());
            return wire::make_response(request, world.time_us(),
                                       wire::Json{{"world_time_us", world.time_us()}});
        }

        if (op == wire::kOpGetState)
            return wire::make_response(request, world.time_us(), world.state_json());

        if (op == wire::kOpReset) {
            if (!request.payload || !request.payload->contains("scenario"))
                return wire::make_error_response(request, world.time_us(),
                                                 "RESET needs {scenario}");
            const auto& sel = (*request.payload)["scenario"];
            Scenario scenario;
            if (sel.is_string()) {
                if (!scenario_dir)
                    return wire::make_error_response(
                        request, world.time_us(),
                        "no scenario directory configured for named scenarios");
                scenario = Scenario::load(*scenario_dir / (sel.get<std::string>() + ".json"));
            } else {
                scenario = Scenario::from_json(sel);
            }
            if (request.payload->contains("seed"))
                scenario.noise_seed = (*request.payload)["seed"].get<std::uint64_t>();
            std::optional<std::string> traj;
            if (request.payload->contains("trajectory_path"))
                traj = (*request.payload)["trajectory_path"].get<std::string>();
            world.reset(std::move(scenario), std::move(traj));
            return wire::make_response(request, world.time_us(),
                                       wire::Json{{"world_time_us", world.time_us()}});
        }

        if (op == wire::kOpShutdown)
            return wire::make_response(request, world.time_us());

        return wire::make_error_response(request, world.time_us(),
                                         "no handler for opcode \"" + op + "\"");
    } catch (const std::exception& e) {
        return wire::make_error_response(request, world.time_us(), e.what());
    }
}

} // namespace cosim::world
