#pragma once
// Power bus: routes component loads to the battery through per-rail DC/DC
// converters and keeps the per-component energy ledger. The battery current
// for a step solves
//     v_term(i) * i = sum(P_load / eta_rail)
// by fixed-point iteration on the terminal voltage.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <cosim/energy/battery.hpp>

namespace cosim::energy {

struct ConverterModel {
    double efficiency = 0.90; // (0,1]
};

struct Load {
    std::string component;
    std::string rail;
    double rail_volts = 0.0;  // for current-mode loads
    double current_ma = 0.0;  // current-mode value
    double power_mw = 0.0;    // power-mode value
    bool power_mode = false;
};

struct ComponentEnergy {
    double load_mj = 0.0;     // energy delivered at the component's rail
    double battery_mj = 0.0;  // same, seen at the battery (converter input)
    std::uint64_t time_us = 0;
};

class PowerBus {
public:
    PowerBus(BatteryModel battery, double default_converter_efficiency = 0.90);

    // Component drawing a current at a fixed rail voltage.
    void add_current_load(const std::string& component, const std::string& rail,
                          double rail_volts);
    // Component specified directly as a power draw.
    void add_power_load(const std::string& component, const std::string& rail);

    void set_converter(const std::string& rail, ConverterModel conv);

    void set_current(const std::string& component, double current_ma);
    void set_power(const std::string& component, double power_mw);

    struct SolveResult {
        double battery_current_ma = 0.0;
        double v_terminal = 0.0;
        double battery_power_mw = 0.0;
    };

    // Solves the battery current for the present loads. Throws NumericError
    // if the fixed point fails to converge (tolerance 1 uA, max 20 rounds)
    // and BatteryExhausted on an empty battery.
    SolveResult solve() const;

    // solve() followed by a battery coulomb step of dt_us, accumulating the
    // per-component energy ledger.
    SolveResult accrue(std::uint64_t dt_us);

    const BatteryModel& battery() const { return battery_; }
    BatteryModel& battery() { return battery_; }
    bool exhausted() const { return exhausted_; }

    double battery_output_mj() const { return battery_output_mj_; }
    double charge_drawn_mah() const { return charge_drawn_mah_; }
    const std::map<std::string, ComponentEnergy>& ledger() const { return ledger_; }
    const std::vector<Load>& loads() const { return loads_; }

private:
    Load& find(const std::string& component);
    double battery_side_power_mw() const;

    BatteryModel battery_;
    double default_eff_ = 0.90;
    std::vector<Load> loads_;
    std::map<std::string, ConverterModel> converters_; // by rail
    std::map<std::string, ComponentEnergy> ledger_;
    double battery_output_mj_ = 0.0;
    double charge_drawn_mah_ = 0.0;
    bool exhausted_ = false;
};

} // namespace cosim::energy
