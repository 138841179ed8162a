#pragma once
// Functional bus: memory-mapped peripheral regions with a fixed per-
// transaction latency charged to the VP clock.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cosim::vp {

class Peripheral {
public:
    virtual ~Peripheral() = default;
    virtual std::vector<std::uint8_t> bus_read(std::uint64_t offset, std::size_t len) = 0;
    virtual void bus_write(std::uint64_t offset, std::span<const std::uint8_t> data) = 0;
};

class FunctionalBus {
public:
    explicit FunctionalBus(std::uint64_t latency_us = 1) : latency_us_(latency_us) {}

    void map_region(std::string name, std::uint64_t base, std::uint64_t size,
                    Peripheral& owner);

    // Charges the bus latency, then forwards to the owning peripheral.
    // Accesses spanning no single region raise BusError.
    std::vector<std::uint8_t> read(std::uint64_t addr, std::size_t len);
    void write(std::uint64_t addr, std::span<const std::uint8_t> data);

    // Called with the latency before every transaction (VP time charge).
    std::function<void(std::uint64_t)> on_latency;

private:
    struct Region {
        std::string name;
        std::uint64_t base = 0;
        std::uint64_t size = 0;
        Peripheral* owner = nullptr;
    };

    const Region& region_for(std::uint64_t addr, std::size_t len) const;

    std::uint64_t latency_us_;
    std::vector<Region> regions_;
};

} // namespace cosim::vp
