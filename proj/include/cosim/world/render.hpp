#pragma once
// Synthetic monochrome camera: pinhole projection of the gate frame,
// flat-shaded dark frame on a light background.

#include <cstdint>
#include <vector>

#include <cosim/world/physics.hpp>
#include <cosim/world/scenario.hpp>

namespace cosim::world {

inline constexpr std::uint8_t kBackgroundShade = 224;
inline constexpr std::uint8_t kGateShade = 32;

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major, 8-bit grayscale

    std::uint8_t at(int col, int row) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

// Pure function of (pose, scenario). Noise, when enabled, is seeded from the
// scenario seed and the pose so repeated renders are identical.
Image render_camera(const DroneState& drone, const Scenario& scenario);

// FNV-1a over the pixel bytes, used to cross-check frames across processes.
std::uint64_t image_hash(const Image& img);

} // namespace cosim::world
