#pragma once
// Wire packets exchanged between the VP client and the world server.
//
// Frame layout: 4-byte big-endian unsigned length N, then exactly N bytes of
// UTF-8 JSON with keys in fixed order (opcode, time_us, status?, payload?).
// Requests carry the sender's VP time; responses carry the server's world
// time plus a status field. Binary payloads (images) travel as base64
// strings inside the JSON body.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cosim::wire {

using Json = nlohmann::ordered_json;

// Malformed frame, unknown opcode, or a status:"error" reply.
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& msg, std::string opcode = {})
        : std::runtime_error(msg), opcode_(std::move(opcode)) {}

    const std::string& opcode() const noexcept { return opcode_; }

private:
    std::string opcode_;
};

struct Packet {
    std::string opcode;
    std::uint64_t time_us = 0;
    std::optional<std::string> status; // "ok" | "error", responses only
    std::optional<Json> payload;

    bool is_response() const { return status.has_value(); }
    bool ok() const { return status && *status == "ok"; }
    bool operator==(const Packet&) const = default;
};

Packet make_request(std::string opcode, std::uint64_t time_us,
                    std::optional<Json> payload = std::nullopt);
Packet make_response(const Packet& request, std::uint64_t world_time_us,
                     std::optional<Json> payload = std::nullopt);
Packet make_error_response(const Packet& request, std::uint64_t world_time_us,
                           const std::string& message);

class Registry;

std::vector<std::uint8_t> encode_packet(const Packet& p, const Registry& registry);

struct DecodedPacket {
    Packet packet;
    std::size_t consumed = 0;
};

// Returns nullopt while the buffer holds only a partial frame; leftover bytes
// past the first complete frame are never consumed. Throws ProtocolError on
// malformed JSON or an opcode absent from the registry.
std::optional<DecodedPacket> decode_packet(std::span<const std::uint8_t> buffer,
                                           const Registry& registry);

std::string base64_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> base64_decode(const std::string& text);

} // namespace cosim::wire
