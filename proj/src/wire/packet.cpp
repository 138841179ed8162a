#include <cosim/wire/packet.hpp>

#include <array>
#include <cstring>

#include <cosim/wire/registry.hpp>

namespace cosim::wire {

namespace {

constexpr std::size_t kLengthPrefixBytes = 4;
constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

void validate(const Packet& p, const Registry& registry) {
    if (p.opcode.empty())
        throw ProtocolError("packet with empty opcode");
    if (!registry.contains(p.opcode))
        throw ProtocolError("unknown opcode \"" + p.opcode + "\"", p.opcode);
    if (p.status && *p.status != "ok" && *p.status != "error")
        throw ProtocolError("invalid status \"" + *p.status + "\"", p.opcode);
}

} // namespace

Packet make_request(std::string opcode, std::uint64_t time_us, std::optional<Json> payload) {
    Packet p;
    p.opcode = std::move(opcode);
    p.time_us = time_us;
    p.payload = std::move(payload);
    return p;
}

Packet make_response(const Packet& request, std::uint64_t world_time_us,
                     std::optional<Json> payload) {
    Packet p;
    p.opcode = request.opcode;
    p.time_us = world_time_us;
    p.status = "ok";
    p.payload = std::move(payload);
    return p;
}

Packet make_error_response(const Packet& request, std::uint64_t world_time_us,
                           const std::string& message) {
    Packet p;
    p.opcode = request.opcode.empty() ? "RESET" : request.opcode;
    p.time_us = world_time_us;
    p.status = "error";
    p.payload = Json{{"message", message}};
    return p;
}

std::vector<std::uint8_t> encode_packet(const Packet& p, const Registry& registry) {
    validate(p, registry);

    Json body;
    body["opcode"] = p.opcode;
    body["time_us"] = p.time_us;
    if (p.status) body["status"] = *p.status;
    if (p.payload) body["payload"] = *p.payload;

    std::string text;
    try {
        text = body.dump();
    } catch (const Json::exception& e) {
        throw ProtocolError(std::string("payload not serializable: ") + e.what(), p.opcode);
    }

    std::vector<std::uint8_t> out(kLengthPrefixBytes + text.size());
    const auto n = static_cast<std::uint32_t>(text.size());
    out[0] = static_cast<std::uint8_t>(n >> 24);
    out[1] = static_cast<std::uint8_t>(n >> 16);
    out[2] = static_cast<std::uint8_t>(n >> 8);
    out[3] = static_cast<std::uint8_t>(n);
    std::memcpy(out.data() + kLengthPrefixBytes, text.data(), text.size());
    return out;
}

std::optional<DecodedPacket> decode_packet(std::span<const std::uint8_t> buffer,
                                           const Registry& registry) {
    if (buffer.size() < kLengthPrefixBytes) return std::nullopt;

    const std::uint32_t n = (std::uint32_t{buffer[0]} << 24) | (std::uint32_t{buffer[1]} << 16) |
                            (std::uint32_t{buffer[2]} << 8) | std::uint32_t{buffer[3]};
    if (buffer.size() < kLengthPrefixBytes + n) return std::nullopt;

    Json body;
    try {
        body = Json::parse(buffer.begin() + kLengthPrefixBytes,
                           buffer.begin() + kLengthPrefixBytes + n);
    } catch (const Json::exception& e) {
        throw ProtocolError(std::string("malformed packet body: ") + e.what());
    }
    if (!body.is_object() || !body.contains("opcode") || !body["opcode"].is_string() ||
        !body.contains("time_us") || !body["time_us"].is_number())
        throw ProtocolError("packet body missing opcode/time_us");

    DecodedPacket out;
    out.packet.opcode = body["opcode"].get<std::string>();
    out.packet.time_us = body["time_us"].get<std::uint64_t>();
    if (body.contains("status")) {
        if (!body["status"].is_string())
            throw ProtocolError("status must be a string", out.packet.opcode);
        out.packet.status = body["status"].get<std::string>();
    }
    if (body.contains("payload")) out.packet.payload = body["payload"];
    out.consumed = kLengthPrefixBytes + n;

    validate(out.packet, registry);
    return out;
}

std::string base64_encode(std::span<const std::uint8_t> data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back(kB64Alphabet[v & 63]);
    }
    const std::size_t rest = data.size() - i;
    if (rest == 1) {
        const std::uint32_t v = data[i] << 16;
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out += "==";
    } else if (rest == 2) {
        const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out += "=";
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    std::array<std::int8_t, 256> rev;
    rev.fill(-1);
    for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(kB64Alphabet[i])] = static_cast<std::int8_t>(i);

    if (text.size() % 4 != 0) throw ProtocolError("base64 length not a multiple of 4");

    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        std::uint32_t v = 0;
        for (int k = 0; k < 4; ++k) {
            const char c = text[i + k];
            if (c == '=') {
                ++pad;
                v <<= 6;
                continue;
            }
            const std::int8_t d = rev[static_cast<unsigned char>(c)];
            if (d < 0 || pad > 0) throw ProtocolError("invalid base64 character");
            v = (v << 6) | static_cast<std::uint32_t>(d);
        }
        out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    }
    return out;
}

} // namespace cosim::wire
