#pragma once
// The VP process core: an abstract SoC executing named tasks, a camera and
// a motor controller on the functional bus, an energy ledger on the power
// bus, and the synchronized connector to the world. Strictly single
// threaded; everything advances one VP clock.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <cosim/config.hpp>
#include <cosim/energy/motor_power.hpp>
#include <cosim/energy/power_bus.hpp>
#include <cosim/sync/sync.hpp>
#include <cosim/vp/bus.hpp>

namespace cosim::vp {

enum class CameraStatus : std::uint8_t { idle = 0, busy = 1, ready = 2 };

class Platform;

// Himax-class monochrome image sensor with a status register and a frame
// buffer holding one full 320x320 frame.
class CameraPeripheral : public Peripheral {
public:
    CameraPeripheral(Platform& vp, const CameraConfig& cfg);

    std::vector<std::uint8_t> bus_read(std::uint64_t offset, std::size_t len) override;
    void bus_write(std::uint64_t offset, std::span<const std::uint8_t> data) override;

    // Synchronized GET_DATA: fills the frame buffer and charges one frame
    // period of active sensor time to the VP clock. On transport failure the
    // capture aborts with the camera back in idle.
    void capture();

    CameraStatus status() const { return status_; }
    const std::vector<std::uint8_t>& frame() const { return frame_; }
    std::uint64_t frame_period_us() const { return period_us_; }

    // Optional completion hook, the interrupt-style alternative to polling.
    std::function<void()> on_frame_ready;

    static constexpr std::uint64_t kStatusOffset = 0;
    static constexpr int kFrameWidth = 320;
    static constexpr int kFrameHeight = 320;

private:
    Platform& vp_;
    CameraConfig cfg_;
    std::uint64_t period_us_;
    CameraStatus status_ = CameraStatus::idle;
    std::vector<std::uint8_t> frame_;
};

// Motor command port: three little-endian doubles (v_mps, yaw_rate, vz_mps).
// Each write forwards one synchronized SET_MOTOR.
class MotorController : public Peripheral {
public:
    explicit MotorController(Platform& vp) : vp_(vp) {}

    std::vector<std::uint8_t> bus_read(std::uint64_t offset, std::size_t len) override;
    void bus_write(std::uint64_t offset, std::span<const std::uint8_t> data) override;

    // Validates locally (|yaw_rate| <= 1, v >= 0) before any packet goes out.
    void set_motors(double v_mps, double yaw_rate, double vz_mps);

    double commanded_speed_mps() const { return v_mps_; }
    double commanded_yaw_rate() const { return yaw_rate_; }
    double commanded_vz_mps() const { return vz_mps_; }

private:
    Platform& vp_;
    double v_mps_ = 0.0;
    double yaw_rate_ = 0.0;
    double vz_mps_ = 0.0;
};

// Task-based stand-in for the instruction-set simulator: named tasks with
// cycle costs, a two-state (active/idle) power model.
class SocModel {
public:
    SocModel(Platform& vp, const SocConfig& cfg);

    // Advances the VP clock by cycles/clock and charges active current for
    // the interval. Returns the elapsed microseconds.
    std::uint64_t run_task(const std::string& name);

    std::uint64_t task_cycles(const std::string& name) const;
    double clock_mhz() const { return cfg_.clock_mhz; }

private:
    Platform& vp_;
    SocConfig cfg_;
};

class Platform {
public:
    // `battery` overrides the catalog battery from the config when given.
    Platform(const SystemConfig& config, wire::Connection conn,
             std::optional<energy::BatteryModel> battery = std::nullopt);

    // Central VP time sink: advances the clock and accrues battery drain for
    // the interval under the current component power states.
    void advance_vp(std::uint64_t delta_us);

    wire::Packet transact(const std::string& opcode,
                          std::optional<wire::Json> payload = std::nullopt);

    std::vector<std::uint8_t> bus_read(std::uint64_t addr, std::size_t len);
    void bus_write(std::uint64_t addr, std::span<const std::uint8_t> data);

    // Motor electrical load tracking (the mission layer owns the airborne
    // flag and commanded speed).
    void set_motor_load(double v_mps, bool airborne);

    void set_camera_active(bool active);
    void set_soc_active(bool active);

    std::uint64_t vp_time_us() const { return sync_.clock().vp_time_us; }
    const sync::SyncClient& sync() const { return sync_; }
    sync::SyncClient& sync() { return sync_; }

    CameraPeripheral& camera() { return camera_; }
    MotorController& motors() { return motors_; }
    SocModel& soc() { return soc_; }
    FunctionalBus& bus() { return bus_; }
    energy::PowerBus& power() { return power_; }
    const energy::MotorPowerModel& motor_model() const { return motor_model_; }
    const SystemConfig& config() const { return config_; }

    double soc_charge() const { return power_.battery().soc; }
    bool battery_exhausted() const { return power_.exhausted(); }

    static constexpr const char* kCameraComponent = "camera";
    static constexpr const char* kSocComponent = "soc";
    static constexpr const char* kMotorComponent = "motors";

private:
    SystemConfig config_;
    sync::SyncClient sync_;
    energy::PowerBus power_;
    energy::MotorPowerModel motor_model_;
    FunctionalBus bus_;
    CameraPeripheral camera_;
    MotorController motors_;
    SocModel soc_;
    std::unique_ptr<Peripheral> frame_region_;
};

} // namespace cosim::vp
