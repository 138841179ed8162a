#pragma once
// Aggregate motor power model: induced (hover) power from actuator-disk
// momentum theory scaled by a figure of merit, plus a propulsion term linear
// in cruise speed.

namespace cosim::energy {

inline constexpr double kGravity = 9.81;       // m/s^2
inline constexpr double kAirDensity = 1.225;   // kg/m^3

struct MotorPowerModel {
    double mass_total_kg = 0.0;                // body + AI deck + battery
    double air_density = kAirDensity;
    double rotor_disk_area_m2 = 0.0;           // all rotors combined
    double figure_of_merit = 0.5;              // ideal/actual hover power, (0,1]
    double eta_propel = 0.7;                   // propulsion efficiency, (0,1]
};

// Disk area for `count` rotors of the given diameter.
double rotor_disk_area(int count, double diameter_m);

// sqrt((m*g)^3 / (2*rho*A)) / FM
double p_hover(const MotorPowerModel& m);

// m*g*v / eta
double p_propel(const MotorPowerModel& m, double v_mps);

// p_hover + p_propel while airborne, 0 on the ground.
double total_motor_power(const MotorPowerModel& m, double v_mps, bool airborne);

} // namespace cosim::energy
