#include <cosim/energy/motor_power.hpp>

#include <cmath>

namespace cosim::energy {

double rotor_disk_area(int count, double diameter_m) {
    const double r = diameter_m / 2.0;
    return count * M_PI * r * r;
}

double p_hover(const MotorPowerModel& m) {
    const double thrust = m.mass_total_kg * kGravity;
    const double ideal = std::sqrt(thrust * thrust * thrust /
                                   (2.0 * m.air_density * m.rotor_disk_area_m2));
    return ideal / m.figure_of_merit;
}

double p_propel(const MotorPowerModel& m, double v_mps) {
    return m.mass_total_kg * kGravity * v_mps / m.eta_propel;
}

double total_motor_power(const MotorPowerModel& m, double v_mps, bool airborne) {
    if (!airborne) return 0.0;
    return p_hover(m) + p_propel(m, v_mps);
}

} // namespace cosim::energy
