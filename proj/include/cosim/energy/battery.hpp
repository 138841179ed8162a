#pragma once
// Zeroth-order battery equivalent circuit: open-circuit voltage as a
// piecewise-linear function of state of charge, a series internal
// resistance, and coulomb counting with an optional parasitic
// self-discharge term.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cosim::energy {

class BatteryExhausted : public std::runtime_error {
public:
    explicit BatteryExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

class OcvCurve {
public:
    // Anchors as (soc, volts), soc descending from 1.0 to 0.0.
    explicit OcvCurve(std::vector<std::pair<double, double>> anchors);

    // Generic 1-cell LiPo shape:
    // (1.0, 4.20) (0.8, 3.95) (0.5, 3.80) (0.2, 3.70) (0.0, 3.00)
    static OcvCurve default_lipo();

    // Linear interpolation between anchors; soc outside [0,1] is a domain
    // error.
    double ocv(double soc) const;

    const std::vector<std::pair<double, double>>& anchors() const { return anchors_; }

private:
    std::vector<std::pair<double, double>> anchors_;
};

struct BatteryModel {
    std::string name;
    double capacity_mah = 250.0;
    double weight_g = 7.1;
    double r_int_ohm = 0.2;
    double self_discharge_ma = 0.05;
    OcvCurve curve = OcvCurve::default_lipo();
    double soc = 1.0;

    struct StepResult {
        double soc = 0.0;
        double v_terminal = 0.0;
        bool exhausted = false; // soc hit 0 during this step
    };

    double ocv() const { return curve.ocv(soc); }

    // Coulomb-counting step: drains (i_load + self_discharge) for dt_us and
    // reports the terminal voltage under i_load. Stepping an already empty
    // battery throws BatteryExhausted.
    StepResult step(double i_load_ma, std::uint64_t dt_us);
};

} // namespace cosim::energy
