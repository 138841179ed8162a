#include <cosim/world/physics.hpp>

#include <algorithm>
#include <cmath>

namespace cosim::world {

DroneState physics_step(const DroneState& s, std::uint64_t dt_us, double omega_max_rad_s) {
    DroneState n = s;
    const double dt = static_cast<double>(dt_us) / 1e6;

    if (!n.airborne) {
        if (n.vz_cmd_mps > 0.0) {
            n.airborne = true; // liftoff
        } else {
            return n; // grounded drones do not move
        }
    }

    n.heading_rad += n.yaw_rate_cmd * omega_max_rad_s * dt;
    n.position.x += n.v_cmd_mps * std::cos(n.heading_rad) * dt;
    n.position.y += n.v_cmd_mps * std::sin(n.heading_rad) * dt;
    n.position.z += n.vz_cmd_mps * dt;

    if (n.position.z <= 0.0 && n.vz_cmd_mps < 0.0) {
        // touchdown
        n.position.z = 0.0;
        n.airborne = false;
        n.v_cmd_mps = 0.0;
        n.vz_cmd_mps = 0.0;
        n.yaw_rate_cmd = 0.0;
    }
    n.position.z = std::max(n.position.z, 0.0);
    return n;
}

TraversalEvent check_traversal(const DroneState& prev, const DroneState& next,
                               const GateSpec& gate) {
    const double gx = gate.center.x;
    const double half_thick = gate.thickness_m / 2.0;

    const double x0 = prev.position.x;
    const double x1 = next.position.x;

    auto lateral_class = [&](double y, double z) {
        const double dy = std::abs(y - gate.center.y);
        const double dz = std::abs(z - gate.center.z);
        const double m = std::max(dy, dz);
        if (m < gate.opening_half()) return TraversalEvent::traversed;
        if (m < gate.frame_half()) return TraversalEvent::collided;
        return TraversalEvent::none;
    };

    if ((x0 - gx) * (x1 - gx) <= 0.0 && x0 != x1) {
        // segment crosses the gate plane; classify at the crossing point
        const double t = (gx - x0) / (x1 - x0);
        const double y = prev.position.y + t * (next.position.y - prev.position.y);
        const double z = prev.position.z + t * (next.position.z - prev.position.z);
        const TraversalEvent cls = lateral_class(y, z);
        if (cls == TraversalEvent::traversed)
            return x1 > x0 ? TraversalEvent::traversed // along the gate normal
                           : TraversalEvent::none;
        return cls;
    }

    // No plane crossing: brushing the frame inside the thickness slab still
    // counts as contact.
    if (std::abs(x1 - gx) <= half_thick &&
        lateral_class(next.position.y, next.position.z) == TraversalEvent::collided)
        return TraversalEvent::collided;

    return TraversalEvent::none;
}

} // namespace cosim::world
