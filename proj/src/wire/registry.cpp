#include <cosim/wire/registry.hpp>

#include <algorithm>
#include <fstream>

#include <cosim/errors.hpp>

namespace cosim::wire {

Direction direction_from_string(std::string_view s) {
    if (s == "vp_to_world") return Direction::vp_to_world;
    if (s == "world_to_vp") return Direction::world_to_vp;
    throw ConfigError("unknown opcode direction \"" + std::string(s) + "\"");
}

PayloadSchema payload_schema_from_string(std::string_view s) {
    if (s == "none") return PayloadSchema::none;
    if (s == "image") return PayloadSchema::image;
    if (s == "motor_cmd") return PayloadSchema::motor_cmd;
    if (s == "advance") return PayloadSchema::advance;
    if (s == "state") return PayloadSchema::state;
    throw ConfigError("unknown payload schema \"" + std::string(s) + "\"");
}

std::string to_string(Direction d) {
    return d == Direction::vp_to_world ? "vp_to_world" : "world_to_vp";
}

std::string to_string(PayloadSchema s) {
    switch (s) {
    case PayloadSchema::none: return "none";
    case PayloadSchema::image: return "image";
    case PayloadSchema::motor_cmd: return "motor_cmd";
    case PayloadSchema::advance: return "advance";
    case PayloadSchema::state: return "state";
    }
    return "none";
}

Registry Registry::builtins() {
    Registry r;
    r.add({kOpGetData, Direction::vp_to_world, PayloadSchema::image});
    r.add({kOpSetMotor, Direction::vp_to_world, PayloadSchema::motor_cmd});
    r.add({kOpAdvance, Direction::vp_to_world, PayloadSchema::advance});
    r.add({kOpReset, Direction::vp_to_world, PayloadSchema::state});
    r.add({kOpGetState, Direction::vp_to_world, PayloadSchema::state});
    r.add({kOpShutdown, Direction::vp_to_world, PayloadSchema::none});
    return r;
}

void Registry::add(OpcodeDescriptor desc) {
    if (contains(desc.name))
        throw ConfigError("duplicate opcode \"" + desc.name + "\"");
    descriptors_.push_back(std::move(desc));
}

bool Registry::contains(std::string_view name) const {
    return std::any_of(descriptors_.begin(), descriptors_.end(),
                       [&](const OpcodeDescriptor& d) { return d.name == name; });
}

const OpcodeDescriptor& Registry::at(std::string_view name) const {
    for (const auto& d : descriptors_)
        if (d.name == name) return d;
    throw ProtocolError("unknown opcode \"" + std::string(name) + "\"", std::string(name));
}

Registry registry_from_config(const Json& config, std::string source) {
    Registry r = Registry::builtins();
    r.set_source_config(std::move(source));
    if (!config.contains("modules")) return r;
    const auto& modules = config["modules"];
    if (!modules.is_array()) throw ConfigError("\"modules\" must be an array");

    for (const auto& mod : modules) {
        if (!mod.contains("opcodes")) continue;
        for (const auto& op : mod["opcodes"]) {
            if (!op.contains("name") || !op["name"].is_string())
                throw ConfigError("module opcode missing \"name\"");
            OpcodeDescriptor d;
            d.name = op["name"].get<std::string>();
            if (op.contains("direction"))
                d.direction = direction_from_string(op["direction"].get<std::string>());
            if (op.contains("payload_schema"))
                d.payload_schema =
                    payload_schema_from_string(op["payload_schema"].get<std::string>());
            r.add(std::move(d));
        }
    }
    return r;
}

Registry load_registry(const std::filesystem::path& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open configuration file " + config_path.string());
    Json config;
    try {
        config = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ConfigError("cannot parse " + config_path.string() + ": " + e.what());
    }
    return registry_from_config(config, config_path.string());
}

} // namespace cosim::wire
