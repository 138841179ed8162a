#include <cosim/vp/bus.hpp>

#include <cosim/errors.hpp>

namespace cosim::vp {

void FunctionalBus::map_region(std::string name, std::uint64_t base, std::uint64_t size,
                               Peripheral& owner) {
    for (const auto& r : regions_) {
        const bool overlaps = base < r.base + r.size && r.base < base + size;
        if (overlaps)
            throw BusError("region \"" + name + "\" overlaps \"" + r.name + "\"");
    }
    regions_.push_back({std::move(name), base, size, &owner});
}

const FunctionalBus::Region& FunctionalBus::region_for(std::uint64_t addr,
                                                       std::size_t len) const {
    for (const auto& r : regions_) {
        if (addr >= r.base && addr + len <= r.base + r.size) return r;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(addr));
    throw BusError("bus error: no peripheral mapped at " + std::string(buf));
}

std::vector<std::uint8_t> FunctionalBus::read(std::uint64_t addr, std::size_t len) {
    const Region& r = region_for(addr, len);
    if (on_latency) on_latency(latency_us_);
    return r.owner->bus_read(addr - r.base, len);
}

void FunctionalBus::write(std::uint64_t addr, std::span<const std::uint8_t> data) {
    const Region& r = region_for(addr, data.size());
    if (on_latency) on_latency(latency_us_);
    r.owner->bus_write(addr - r.base, data);
}

} // namespace cosim::vp
