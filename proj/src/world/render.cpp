#include <cosim/world/render.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace cosim::world {

namespace {

struct CamPoint {
    double right;   // along the camera's right axis
    double up;      // along +z
    double forward; // depth
};

struct Px {
    double u;
    double v;
};

constexpr double kNearPlane = 0.05;

// Sutherland-Hodgman clip of a polygon against forward >= kNearPlane.
std::vector<CamPoint> clip_near(const std::vector<CamPoint>& poly) {
    std::vector<CamPoint> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const CamPoint& a = poly[i];
        const CamPoint& b = poly[(i + 1) % n];
        const bool a_in = a.forward >= kNearPlane;
        const bool b_in = b.forward >= kNearPlane;
        if (a_in) out.push_back(a);
        if (a_in != b_in) {
            const double t = (kNearPlane - a.forward) / (b.forward - a.forward);
            out.push_back({a.right + t * (b.right - a.right), a.up + t * (b.up - a.up),
                           kNearPlane});
        }
    }
    return out;
}

void fill_polygon(Image& img, const std::vector<Px>& pts, std::uint8_t shade) {
    if (pts.size() < 3) return;
    double vmin = pts[0].v, vmax = pts[0].v;
    for (const auto& p : pts) {
        vmin = std::min(vmin, p.v);
        vmax = std::max(vmax, p.v);
    }
    const int row_begin = std::max(0, static_cast<int>(std::floor(vmin - 0.5)));
    const int row_end = std::min(img.height - 1, static_cast<int>(std::ceil(vmax + 0.5)));

    std::vector<double> xs;
    for (int row = row_begin; row <= row_end; ++row) {
        const double py = row + 0.5;
        xs.clear();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Px& a = pts[i];
            const Px& b = pts[(i + 1) % pts.size()];
            if ((a.v <= py && b.v > py) || (b.v <= py && a.v > py)) {
                const double t = (py - a.v) / (b.v - a.v);
                xs.push_back(a.u + t * (b.u - a.u));
            }
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
            int col = std::max(0, static_cast<int>(std::ceil(xs[i] - 0.5)));
            const int col_end = std::min(img.width - 1, static_cast<int>(std::floor(xs[i + 1] - 0.5)));
            for (; col <= col_end; ++col)
                img.pixels[static_cast<std::size_t>(row) * img.width + col] = shade;
        }
    }
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

Image render_camera(const DroneState& drone, const Scenario& scenario) {
    const CameraIntrinsics& cam = scenario.camera;
    Image img;
    img.width = cam.width;
    img.height = cam.height;
    img.pixels.assign(static_cast<std::size_t>(cam.width) * cam.height, kBackgroundShade);

    const double ch = std::cos(drone.heading_rad);
    const double sh = std::sin(drone.heading_rad);
    const Vec3 fwd{ch, sh, 0.0};
    const Vec3 right{sh, -ch, 0.0};

    auto to_cam = [&](const Vec3& world) -> CamPoint {
        const Vec3 d = world - drone.position;
        return {d.dot(right), d.z, d.dot(fwd)};
    };

    const GateSpec& gate = scenario.gate;
    auto quad = [&](double half) {
        std::vector<CamPoint> poly;
        poly.reserve(4);
        const std::array<std::pair<double, double>, 4> corners{
            {{-half, -half}, {half, -half}, {half, half}, {-half, half}}};
        for (const auto& [dy, dz] : corners)
            poly.push_back(
                to_cam({gate.center.x, gate.center.y + dy, gate.center.z + dz}));
        return clip_near(poly);
    };

    const double f_px = cam.focal_px();
    const double cx = cam.width / 2.0;
    const double cy = cam.height / 2.0;
    auto project = [&](const std::vector<CamPoint>& poly) {
        std::vector<Px> out;
        out.reserve(poly.size());
        for (const auto& p : poly)
            out.push_back({cx + f_px * p.right / p.forward, cy - f_px * p.up / p.forward});
        return out;
    };

    const auto outer = quad(gate.frame_half());
    if (!outer.empty()) {
        fill_polygon(img, project(outer), kGateShade);
        const auto inner = quad(gate.opening_half());
        if (!inner.empty()) fill_polygon(img, project(inner), kBackgroundShade);
    }

    if (scenario.noise_stddev > 0.0) {
        // Seeded from the pose so the image stays a pure function of
        // (pose, scenario).
        std::uint64_t h = scenario.noise_seed ^ 0xcbf29ce484222325ull;
        const double pose[4] = {drone.position.x, drone.position.y, drone.position.z,
                                drone.heading_rad};
        h = fnv1a(pose, sizeof pose, h);
        std::mt19937_64 rng(h);
        std::normal_distribution<double> noise(0.0, scenario.noise_stddev);
        for (auto& px : img.pixels) {
            const double v = px + noise(rng);
            px = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
        }
    }
    return img;
}

std::uint64_t image_hash(const Image& img) {
    return fnv1a(img.pixels.data(), img.pixels.size(), 0xcbf29ce484222325ull);
}

} // namespace cosim::world
