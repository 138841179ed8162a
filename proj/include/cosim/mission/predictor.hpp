#pragma once
// Perception stage of the mission software: frame downsampling and the yaw
// predictor that stands in for the CNN. The geometric oracle locates the
// dark-pixel centroid and maps its horizontal offset to a yaw command in
// [-1, 1]; a plugin hook keeps the seam for real inference.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <cosim/world/render.hpp>

namespace cosim::mission {

inline constexpr int kModelInputSize = 168;

// Area-weighted resample of a 320x320 frame to 168x168.
world::Image downsample(const world::Image& src);

class YawPredictor {
public:
    enum class Mode { geometric_oracle, plugin };

    Mode mode = Mode::geometric_oracle;
    double gain = 1.0;
    std::function<double(const world::Image&)> plugin;

    // Input must be the downsampled 168x168 frame. When no gate pixel is
    // visible, steers at full rate toward the side it was last seen on.
    double predict(const world::Image& img);

    double last_prediction() const { return last_; }

private:
    double last_ = 0.0;
    double last_sign_ = 0.0;
};

} // namespace cosim::mission
