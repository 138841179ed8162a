#pragma once
// Fixed-timestep kinematic flight model and gate traversal/collision tests.

#include <cstdint>

#include <cosim/world/scenario.hpp>

namespace cosim::world {

struct DroneState {
    Vec3 position;
    double heading_rad = 0.0;
    double v_cmd_mps = 0.0;      // horizontal speed along heading
    double yaw_rate_cmd = 0.0;   // normalized [-1, 1]
    double vz_cmd_mps = 0.0;
    bool airborne = false;
};

// One physics tick. Heading integrates yaw_rate_cmd * omega_max; position
// integrates the commanded velocity. A drone on the ground does not move;
// it lifts off when vz_cmd > 0 and lands (velocity zeroed) when it reaches
// z = 0 while descending.
DroneState physics_step(const DroneState& s, std::uint64_t dt_us, double omega_max_rad_s);

enum class TraversalEvent { none, traversed, collided };

// Classifies the segment prev -> next against the gate: crossing the plane
// inside the opening (along +x only) is a traversal; crossing within the
// frame ring, crossing backwards through the frame, or ending inside the
// frame slab is a collision.
TraversalEvent check_traversal(const DroneState& prev, const DroneState& next,
                               const GateSpec& gate);

} // namespace cosim::world
