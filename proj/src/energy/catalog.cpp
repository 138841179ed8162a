#include <cosim/energy/catalog.hpp>

#include <fstream>

#include <json.hpp>

#include <cosim/errors.hpp>

namespace cosim::energy {

namespace {

BatteryModel battery_from_json(const nlohmann::ordered_json& j) {
    BatteryModel b;
    if (!j.contains("name") || !j.contains("capacity_mah") || !j.contains("weight_g"))
        throw ConfigError("battery entry needs name, capacity_mah and weight_g");
    b.name = j["name"].get<std::string>();
    b.capacity_mah = j["capacity_mah"].get<double>();
    b.weight_g = j["weight_g"].get<double>();
    b.r_int_ohm = j.value("r_int_ohm", b.r_int_ohm);
    b.self_discharge_ma = j.value("self_discharge_ma", b.self_discharge_ma);
    if (j.contains("ocv_anchors")) {
        std::vector<std::pair<double, double>> anchors;
        for (const auto& a : j["ocv_anchors"])
            anchors.emplace_back(a[0].get<double>(), a[1].get<double>());
        b.curve = OcvCurve(std::move(anchors));
    }
    if (b.capacity_mah <= 0.0 || b.weight_g <= 0.0)
        throw ConfigError("battery \"" + b.name + "\" has non-positive capacity or weight");
    return b;
}

} // namespace

std::vector<BatteryModel> load_battery_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open battery catalog " + path.string());
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    if (!doc.is_array()) throw ConfigError("battery catalog must be a JSON array");

    std::vector<BatteryModel> out;
    for (const auto& entry : doc) out.push_back(battery_from_json(entry));
    return out;
}

std::vector<BatteryModel> default_battery_catalog() {
    std::vector<BatteryModel> out;
    BatteryModel b;
    b.name = "bitcraze_250";
    b.capacity_mah = 250.0;
    b.weight_g = 7.1;
    out.push_back(b);
    b.name = "ufx_250";
    b.capacity_mah = 250.0;
    b.weight_g = 5.8;
    out.push_back(b);
    b.name = "cyclone_300";
    b.capacity_mah = 300.0;
    b.weight_g = 8.1;
    out.push_back(b);
    b.name = "lipol_350";
    b.capacity_mah = 350.0;
    b.weight_g = 9.2;
    out.push_back(b);
    return out;
}

BatteryModel find_battery(const std::vector<BatteryModel>& catalog, const std::string& name) {
    for (const auto& b : catalog)
        if (b.name == name) return b;
    throw ConfigError("battery \"" + name + "\" not in catalog");
}

} // namespace cosim::energy
