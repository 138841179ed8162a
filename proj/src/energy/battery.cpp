#include <cosim/energy/battery.hpp>

#include <cmath>

#include <cosim/errors.hpp>

namespace cosim::energy {

namespace {
// capacity in mAh -> charge in mA*us
constexpr double kMahToMaUs = 3600.0 * 1e6;
} // namespace

OcvCurve::OcvCurve(std::vector<std::pair<double, double>> anchors)
    : anchors_(std::move(anchors)) {
    if (anchors_.size() < 2) throw ConfigError("ocv curve needs at least two anchors");
    for (std::size_t i = 1; i < anchors_.size(); ++i) {
        if (anchors_[i].first >= anchors_[i - 1].first)
            throw ConfigError("ocv anchors must have strictly descending soc");
        if (anchors_[i].second > anchors_[i - 1].second)
            throw ConfigError("ocv must be non-increasing as soc decreases");
    }
    if (anchors_.front().first != 1.0 || anchors_.back().first != 0.0)
        throw ConfigError("ocv anchors must span soc 1.0 down to 0.0");
}

OcvCurve OcvCurve::default_lipo() {
    return OcvCurve({{1.0, 4.20}, {0.8, 3.95}, {0.5, 3.80}, {0.2, 3.70}, {0.0, 3.00}});
}

double OcvCurve::ocv(double soc) const {
    if (soc < 0.0 || soc > 1.0)
        throw std::domain_error("soc out of [0,1]: " + std::to_string(soc));
    for (std::size_t i = 1; i < anchors_.size(); ++i) {
        const auto [hi_soc, hi_v] = anchors_[i - 1];
        const auto [lo_soc, lo_v] = anchors_[i];
        if (soc >= lo_soc) {
            const double t = (soc - lo_soc) / (hi_soc - lo_soc);
            return lo_v + t * (hi_v - lo_v);
        }
    }
    return anchors_.back().second;
}

BatteryModel::StepResult BatteryModel::step(double i_load_ma, std::uint64_t dt_us) {
    if (soc <= 0.0)
        throw BatteryExhausted("battery \"" + name + "\" is empty");
    if (i_load_ma < 0.0)
        throw std::domain_error("negative load current (charging is not modeled)");

    const double drawn_ma = i_load_ma + self_discharge_ma;
    const double delta = drawn_ma * static_cast<double>(dt_us) / (capacity_mah * kMahToMaUs);

    StepResult out;
    soc -= delta;
    if (soc <= 0.0) {
        soc = 0.0;
        out.exhausted = true;
    }
    out.soc = soc;
    out.v_terminal = curve.ocv(soc) - (i_load_ma / 1000.0) * r_int_ohm;
    return out;
}

} // namespace cosim::energy
