#include <cosim/mission/predictor.hpp>

#include <algorithm>
#include <cmath>

#include <cosim/errors.hpp>

namespace cosim::mission {

namespace {
constexpr std::uint8_t kDarkThreshold = 128;
} // namespace

world::Image downsample(const world::Image& src) {
    if (src.width != 320 || src.height != 320 ||
        src.pixels.size() != static_cast<std::size_t>(src.width) * src.height)
        throw ConfigError("downsample expects a 320x320 8-bit frame");

    world::Image dst;
    dst.width = kModelInputSize;
    dst.height = kModelInputSize;
    dst.pixels.resize(static_cast<std::size_t>(kModelInputSize) * kModelInputSize);

    // Area-weighted resample: each destination pixel averages the source
    // rectangle it covers, with fractional rows/columns weighted by overlap.
    const double scale = static_cast<double>(src.width) / kModelInputSize;
    for (int dr = 0; dr < kModelInputSize; ++dr) {
        const double y0 = dr * scale;
        const double y1 = (dr + 1) * scale;
        for (int dc = 0; dc < kModelInputSize; ++dc) {
            const double x0 = dc * scale;
            const double x1 = (dc + 1) * scale;

            double acc = 0.0;
            double area = 0.0;
            for (int sr = static_cast<int>(y0); sr < static_cast<int>(std::ceil(y1)); ++sr) {
                const double wy =
                    std::min<double>(y1, sr + 1) - std::max<double>(y0, sr);
                for (int sc = static_cast<int>(x0); sc < static_cast<int>(std::ceil(x1));
                     ++sc) {
                    const double wx =
                        std::min<double>(x1, sc + 1) - std::max<double>(x0, sc);
                    acc += wx * wy * src.at(sc, sr);
                    area += wx * wy;
                }
            }
            dst.pixels[static_cast<std::size_t>(dr) * kModelInputSize + dc] =
                static_cast<std::uint8_t>(std::lround(acc / area));
        }
    }
    return dst;
}

double YawPredictor::predict(const world::Image& img) {
    if (mode == Mode::plugin) {
        if (!plugin) throw ConfigError("plugin predictor not installed");
        last_ = std::clamp(plugin(img), -1.0, 1.0);
        if (last_ != 0.0) last_sign_ = last_ > 0.0 ? 1.0 : -1.0;
        return last_;
    }

    if (img.width != kModelInputSize || img.height != kModelInputSize)
        throw ConfigError("predictor expects the downsampled frame");

    double col_sum = 0.0;
    std::uint64_t count = 0;
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            if (img.at(c, r) < kDarkThreshold) {
                col_sum += c;
                ++count;
            }
        }
    }

    if (count == 0) {
        // gate lost: steer at full rate toward the side it was last seen on
        last_ = last_sign_ == 0.0 ? 0.0 : last_sign_;
        return last_;
    }

    const double centroid = col_sum / static_cast<double>(count);
    const double offset = 2.0 * centroid / img.width - 1.0;
    last_ = std::clamp(gain * offset, -1.0, 1.0);
    if (last_ != 0.0) last_sign_ = last_ > 0.0 ? 1.0 : -1.0;
    return last_;
}

} // namespace cosim::mission
