#include <cosim/energy/power_bus.hpp>

#include <cmath>

#include <cosim/errors.hpp>

namespace cosim::energy {

PowerBus::PowerBus(BatteryModel battery, double default_converter_efficiency)
    : battery_(std::move(battery)), default_eff_(default_converter_efficiency) {
    if (default_eff_ <= 0.0 || default_eff_ > 1.0)
        throw ConfigError("converter efficiency must be in (0,1]");
}

void PowerBus::add_current_load(const std::string& component, const std::string& rail,
                                double rail_volts) {
    loads_.push_back({component, rail, rail_volts, 0.0, 0.0, false});
    ledger_[component];
}

void PowerBus::add_power_load(const std::string& component, const std::string& rail) {
    loads_.push_back({component, rail, 0.0, 0.0, 0.0, true});
    ledger_[component];
}

void PowerBus::set_converter(const std::string& rail, ConverterModel conv) {
    if (conv.efficiency <= 0.0 || conv.efficiency > 1.0)
        throw ConfigError("converter efficiency must be in (0,1]");
    converters_[rail] = conv;
}

Load& PowerBus::find(const std::string& component) {
    for (auto& l : loads_)
        if (l.component == component) return l;
    throw ConfigError("unknown power bus component \"" + component + "\"");
}

void PowerBus::set_current(const std::string& component, double current_ma) {
    find(component).current_ma = current_ma;
}

void PowerBus::set_power(const std::string& component, double power_mw) {
    find(component).power_mw = power_mw;
}

double PowerBus::battery_side_power_mw() const {
    double total = 0.0;
    for (const auto& l : loads_) {
        const double load_mw = l.power_mode ? l.power_mw : l.rail_volts * l.current_ma;
        const auto it = converters_.find(l.rail);
        const double eff = it != converters_.end() ? it->second.efficiency : default_eff_;
        total += load_mw / eff;
    }
    return total;
}

PowerBus::SolveResult PowerBus::solve() const {
    if (exhausted_ || battery_.soc <= 0.0)
        throw BatteryExhausted("battery \"" + battery_.name + "\" is empty");

    const double p_mw = battery_side_power_mw();
    const double ocv = battery_.ocv();

    SolveResult out;
    out.battery_power_mw = p_mw;
    if (p_mw <= 0.0) {
        out.battery_current_ma = 0.0;
        out.v_terminal = ocv;
        return out;
    }

    // v_term(i) = ocv - i*r; fixed point i <- P / v_term(i).
    constexpr int kMaxRounds = 20;
    constexpr double kTolMa = 1e-3; // 1 uA
    double i_ma = p_mw / ocv;
    for (int round = 0; round < kMaxRounds; ++round) {
        const double v = ocv - (i_ma / 1000.0) * battery_.r_int_ohm;
        if (v <= 0.0)
            throw NumericError("terminal voltage collapsed while solving the power bus");
        const double next = p_mw / v;
        if (std::abs(next - i_ma) < kTolMa) {
            out.battery_current_ma = next;
            out.v_terminal = ocv - (next / 1000.0) * battery_.r_int_ohm;
            return out;
        }
        i_ma = next;
    }
    throw NumericError("power bus fixed point did not converge");
}

PowerBus::SolveResult PowerBus::accrue(std::uint64_t dt_us) {
    SolveResult solved = solve();

    const auto res = battery_.step(solved.battery_current_ma, dt_us);
    exhausted_ = res.exhausted;

    const double dt_s = static_cast<double>(dt_us) / 1e6;
    battery_output_mj_ += solved.v_terminal * solved.battery_current_ma * dt_s;
    charge_drawn_mah_ += solved.battery_current_ma * dt_s / 3600.0;

    for (const auto& l : loads_) {
        const double load_mw = l.power_mode ? l.power_mw : l.rail_volts * l.current_ma;
        const auto it = converters_.find(l.rail);
        const double eff = it != converters_.end() ? it->second.efficiency : default_eff_;
        auto& entry = ledger_[l.component];
        entry.load_mj += load_mw * dt_s;
        entry.battery_mj += load_mw / eff * dt_s;
        if (load_mw > 0.0) entry.time_us += dt_us;
    }

    return solved;
}

} // namespace cosim::energy
