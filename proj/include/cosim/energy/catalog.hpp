#pragma once
// Battery catalog file: a JSON array of
//   {name, capacity_mah, weight_g, r_int_ohm?, self_discharge_ma?, ocv_anchors?}
// The default catalog ships the four candidate packs for the nano-UAV.

#include <filesystem>
#include <string>
#include <vector>

#include <cosim/energy/battery.hpp>

namespace cosim::energy {

std::vector<BatteryModel> load_battery_catalog(const std::filesystem::path& path);

// The four packs used by the stock experiments.
std::vector<BatteryModel> default_battery_catalog();

// Throws ConfigError when the name is absent.
BatteryModel find_battery(const std::vector<BatteryModel>& catalog, const std::string& name);

} // namespace cosim::energy
