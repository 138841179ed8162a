#pragma once
// Opcode registry. Six opcodes are built in; the system configuration file
// may declare more per module, which end up in the same dispatch table.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <cosim/wire/packet.hpp>

namespace cosim::wire {

enum class Direction { vp_to_world, world_to_vp };
enum class PayloadSchema { none, image, motor_cmd, advance, state };

Direction direction_from_string(std::string_view s);
PayloadSchema payload_schema_from_string(std::string_view s);
std::string to_string(Direction d);
std::string to_string(PayloadSchema s);

struct OpcodeDescriptor {
    std::string name;
    Direction direction = Direction::vp_to_world;
    PayloadSchema payload_schema = PayloadSchema::none;
};

// Built-in opcodes present in every registry.
inline constexpr const char* kOpGetData = "GET_DATA";
inline constexpr const char* kOpSetMotor = "SET_MOTOR";
inline constexpr const char* kOpAdvance = "ADVANCE";
inline constexpr const char* kOpReset = "RESET";
inline constexpr const char* kOpGetState = "GET_STATE";
inline constexpr const char* kOpShutdown = "SHUTDOWN";

class Registry {
public:
    // Registry holding only the built-in opcodes.
    static Registry builtins();

    // Throws ConfigError when the name is already present.
    void add(OpcodeDescriptor desc);

    bool contains(std::string_view name) const;
    const OpcodeDescriptor& at(std::string_view name) const; // throws ProtocolError
    std::size_t size() const { return descriptors_.size(); }
    const std::vector<OpcodeDescriptor>& descriptors() const { return descriptors_; }

    const std::string& source_config() const { return source_config_; }
    void set_source_config(std::string path) { source_config_ = std::move(path); }

private:
    std::vector<OpcodeDescriptor> descriptors_;
    std::string source_config_;
};

// Builds a registry from the `modules` section of a parsed configuration
// document: built-ins first, then each module's declared opcodes.
Registry registry_from_config(const Json& config, std::string source);

// Same, reading the configuration file from disk.
Registry load_registry(const std::filesystem::path& config_path);

} // namespace cosim::wire
