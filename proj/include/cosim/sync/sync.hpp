#pragma once
// Lock-step coupling of the timing-accurate VP clock to the fixed-timestep
// world clock. Every request to the world passes through
// synchronized_transaction, which first advances the world to the first
// timestep at or past the current VP time, then dispatches the request.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include <cosim/wire/packet.hpp>
#include <cosim/wire/registry.hpp>
#include <cosim/wire/transport.hpp>

namespace cosim::sync {

struct SimClock {
    std::uint64_t vp_time_us = 0;
    std::uint64_t world_time_us = 0;
    std::uint64_t world_step_us = 32000;
};

// Smallest n >= 0 with world_time_us + n*world_step_us >= vp_time_us.
std::uint64_t steps_to_align(std::uint64_t vp_time_us, std::uint64_t world_time_us,
                             std::uint64_t world_step_us);

struct SyncStats {
    std::uint64_t transactions = 0;
    std::uint64_t world_steps = 0;
    // slack = world_time - vp_time observed right after each transaction
    std::int64_t min_slack_us = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_slack_us = std::numeric_limits<std::int64_t>::min();
};

// Aligns the world (ADVANCE), sends `request` stamped at the clock's VP time,
// and returns the reply. On return the clock invariant
//   0 <= world_time_us - vp_time_us < world_step_us
// holds; a violation or a status:"error" reply raises ProtocolError.
wire::Packet synchronized_transaction(SimClock& clock, const wire::Packet& request,
                                      wire::Connection& conn,
                                      const wire::Registry& registry,
                                      SyncStats* stats = nullptr);

// Client-side convenience wrapper owning the clock and the connection.
class SyncClient {
public:
    SyncClient(wire::Connection conn, const wire::Registry& registry,
               std::uint64_t world_step_us);

    wire::Packet transact(const std::string& opcode,
                          std::optional<wire::Json> payload = std::nullopt);

    // Accumulates VP-only progress (task execution, sensor exposure). The
    // world catches up lazily at the next transaction.
    void advance_vp(std::uint64_t delta_us);

    const SimClock& clock() const { return clock_; }
    SimClock& clock() { return clock_; }
    const SyncStats& stats() const { return stats_; }
    wire::Connection& connection() { return conn_; }
    const wire::Registry& registry() const { return *registry_; }

    // Invoked on every advance_vp with the delta; used for energy accrual.
    std::function<void(std::uint64_t)> on_advance;

private:
    wire::Connection conn_;
    const wire::Registry* registry_;
    SimClock clock_;
    SyncStats stats_;
};

} // namespace cosim::sync
