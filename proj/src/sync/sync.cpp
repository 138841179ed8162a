#include <cosim/sync/sync.hpp>

#include <algorithm>

namespace cosim::sync {

std::uint64_t steps_to_align(std::uint64_t vp_time_us, std::uint64_t world_time_us,
                             std::uint64_t world_step_us) {
    if (world_time_us >= vp_time_us) return 0;
    const std::uint64_t gap = vp_time_us - world_time_us;
    return (gap + world_step_us - 1) / world_step_us;
}

namespace {

void note_slack(SyncStats* stats, const SimClock& clock) {
    if (!stats) return;
    stats->transactions += 1;
    const auto slack = static_cast<std::int64_t>(clock.world_time_us) -
                       static_cast<std::int64_t>(clock.vp_time_us);
    stats->min_slack_us = std::min(stats->min_slack_us, slack);
    stats->max_slack_us = std::max(stats->max_slack_us, slack);
}

} // namespace

wire::Packet synchronized_transaction(SimClock& clock, const wire::Packet& request,
                                      wire::Connection& conn, const wire::Registry& registry,
                                      SyncStats* stats) {
    if (request.time_us != clock.vp_time_us)
        throw wire::ProtocolError("request timestamp does not match the VP clock",
                                  request.opcode);

    const std::uint64_t steps =
        steps_to_align(clock.vp_time_us, clock.world_time_us, clock.world_step_us);
    if (steps > 0) {
        wire::Packet advance = wire::make_request(
            wire::kOpAdvance, clock.vp_time_us, wire::Json{{"steps", steps}});
        conn.send_packet(advance, registry);
        const wire::Packet ack = conn.recv_packet(registry);
        if (!ack.ok())
            throw wire::ProtocolError("ADVANCE rejected: " +
                                          (ack.payload ? ack.payload->value("message", "")
                                                       : std::string{}),
                                      wire::kOpAdvance);
        const std::uint64_t expected = clock.world_time_us + steps * clock.world_step_us;
        clock.world_time_us = (*ack.payload)["world_time_us"].get<std::uint64_t>();
        if (clock.world_time_us != expected)
            throw wire::ProtocolError("world clock drift after ADVANCE", wire::kOpAdvance);
        if (stats) stats->world_steps += steps;
    }

    conn.send_packet(request, registry);
    wire::Packet response = conn.recv_packet(registry);
    if (response.status && *response.status == "error") {
        const std::string msg =
            response.payload ? response.payload->value("message", "") : std::string{};
        throw wire::ProtocolError("\"" + request.opcode + "\" failed: " + msg, request.opcode);
    }

    // Responses are stamped with the server's world time; RESET and ADVANCE
    // legitimately move it.
    clock.world_time_us = response.time_us;

    const bool aligned = clock.world_time_us >= clock.vp_time_us &&
                         clock.world_time_us - clock.vp_time_us < clock.world_step_us;
    if (!aligned)
        throw wire::ProtocolError("lock-step invariant violated after \"" + request.opcode +
                                      "\"",
                                  request.opcode);
    note_slack(stats, clock);
    return response;
}

SyncClient::SyncClient(wire::Connection conn, const wire::Registry& registry,
                       std::uint64_t world_step_us)
    : conn_(std::move(conn)), registry_(&registry) {
    clock_.world_step_us = world_step_us;
}

wire::Packet SyncClient::transact(const std::string& opcode, std::optional<wire::Json> payload) {
    const wire::Packet request = wire::make_request(opcode, clock_.vp_time_us, std::move(payload));
    return synchronized_transaction(clock_, request, conn_, *registry_, &stats_);
}

void SyncClient::advance_vp(std::uint64_t delta_us) {
    clock_.vp_time_us += delta_us;
    if (on_advance) on_advance(delta_us);
}

} // namespace cosim::sync
