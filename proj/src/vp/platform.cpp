#include <cosim/vp/platform.hpp>

#include <cstring>

#include <cosim/energy/catalog.hpp>
#include <cosim/errors.hpp>

namespace cosim::vp {

// ---------------------------------------------------------------- camera

CameraPeripheral::CameraPeripheral(Platform& vp, const CameraConfig& cfg)
    : vp_(vp), cfg_(cfg), period_us_(cfg.frame_period_us()),
      frame_(static_cast<std::size_t>(kFrameWidth) * kFrameHeight, 0) {}

std::vector<std::uint8_t> CameraPeripheral::bus_read(std::uint64_t offset, std::size_t len) {
    if (offset == kStatusOffset && len == 1)
        return {static_cast<std::uint8_t>(status_)};
    throw BusError("camera register read outside the status register");
}

void CameraPeripheral::bus_write(std::uint64_t, std::span<const std::uint8_t>) {
    throw BusError("camera registers are read-only");
}

void CameraPeripheral::capture() {
    if (status_ == CameraStatus::busy)
        throw BusError("camera capture while busy");
    status_ = CameraStatus::busy;
    vp_.set_camera_active(true);
    try {
        const wire::Packet reply = vp_.transact(wire::kOpGetData);
        const auto& p = *reply.payload;
        if (p.value("format", "") != std::string("gray8") ||
            p.value("width", 0) != kFrameWidth || p.value("height", 0) != kFrameHeight)
            throw wire::ProtocolError("unexpected image format in GET_DATA reply",
                                      wire::kOpGetData);
        frame_ = wire::base64_decode(p.at("data").get<std::string>());
        if (frame_.size() != static_cast<std::size_t>(kFrameWidth) * kFrameHeight)
            throw wire::ProtocolError("short image payload", wire::kOpGetData);
    } catch (...) {
        // capture aborted: no frame, sensor back to idle
        vp_.set_camera_active(false);
        status_ = CameraStatus::idle;
        throw;
    }

    // exposure + readout occupy one frame period of VP time at active current
    vp_.advance_vp(period_us_);
    vp_.set_camera_active(false);
    status_ = CameraStatus::ready;
    if (on_frame_ready) on_frame_ready();
}

// ---------------------------------------------------------------- frame buffer

namespace {

// Read-only window exposing the camera frame as a contiguous memory area.
class FrameBufferRegion : public Peripheral {
public:
    explicit FrameBufferRegion(CameraPeripheral& cam) : cam_(cam) {}

    std::vector<std::uint8_t> bus_read(std::uint64_t offset, std::size_t len) override {
        if (cam_.status() != CameraStatus::ready)
            throw BusError("frame buffer read before the camera is ready");
        const auto& f = cam_.frame();
        if (offset + len > f.size()) throw BusError("frame buffer read out of bounds");
        return {f.begin() + static_cast<std::ptrdiff_t>(offset),
                f.begin() + static_cast<std::ptrdiff_t>(offset + len)};
    }

    void bus_write(std::uint64_t, std::span<const std::uint8_t>) override {
        throw BusError("frame buffer is read-only");
    }

private:
    CameraPeripheral& cam_;
};

} // namespace

// ---------------------------------------------------------------- motors

std::vector<std::uint8_t> MotorController::bus_read(std::uint64_t offset, std::size_t len) {
    double regs[3] = {v_mps_, yaw_rate_, vz_mps_};
    if (offset + len > sizeof regs) throw BusError("motor register read out of bounds");
    std::vector<std::uint8_t> out(len);
    std::memcpy(out.data(), reinterpret_cast<const std::uint8_t*>(regs) + offset, len);
    return out;
}

void MotorController::bus_write(std::uint64_t offset, std::span<const std::uint8_t> data) {
    if (offset != 0 || data.size() != 3 * sizeof(double))
        throw BusError("motor command must write the three doubles at offset 0");
    double regs[3];
    std::memcpy(regs, data.data(), sizeof regs);
    set_motors(regs[0], regs[1], regs[2]);
}

void MotorController::set_motors(double v_mps, double yaw_rate, double vz_mps) {
    if (yaw_rate < -1.0 || yaw_rate > 1.0)
        throw std::domain_error("yaw rate command outside [-1, 1]");
    if (v_mps < 0.0) throw std::domain_error("commanded speed must be >= 0");

    vp_.transact(wire::kOpSetMotor, wire::Json{{"v_mps", v_mps},
                                               {"yaw_rate", yaw_rate},
                                               {"vz_mps", vz_mps}});
    v_mps_ = v_mps;
    yaw_rate_ = yaw_rate;
    vz_mps_ = vz_mps;
}

// ---------------------------------------------------------------- soc

SocModel::SocModel(Platform& vp, const SocConfig& cfg) : vp_(vp), cfg_(cfg) {}

std::uint64_t SocModel::task_cycles(const std::string& name) const {
    const auto it = cfg_.tasks.find(name);
    if (it == cfg_.tasks.end()) throw ConfigError("unknown task \"" + name + "\"");
    return it->second;
}

std::uint64_t SocModel::run_task(const std::string& name) {
    const std::uint64_t cycles = task_cycles(name);
    // cycles / MHz = microseconds
    const auto elapsed_us =
        static_cast<std::uint64_t>(static_cast<double>(cycles) / cfg_.clock_mhz + 0.5);
    vp_.set_soc_active(true);
    vp_.advance_vp(elapsed_us);
    vp_.set_soc_active(false);
    return elapsed_us;
}

// ---------------------------------------------------------------- platform

Platform::Platform(const SystemConfig& config, wire::Connection conn,
                   std::optional<energy::BatteryModel> battery)
    : config_(config), sync_(std::move(conn), config_.registry, config_.world.step_us),
      power_(
          [&] {
              if (battery) return *battery;
              return energy::find_battery(
                  energy::load_battery_catalog(config.resolve(config.energy.battery_catalog)),
                  config.energy.battery);
          }(),
          config.energy.converter_efficiency),
      bus_(config.vp.bus_latency_us), camera_(*this, config.camera), motors_(*this),
      soc_(*this, config.soc) {
    motor_model_.mass_total_kg =
        (config_.motors.body_mass_g + power_.battery().weight_g) / 1000.0;
    motor_model_.air_density = config_.motors.air_density;
    motor_model_.rotor_disk_area_m2 =
        energy::rotor_disk_area(config_.motors.rotor_count, config_.motors.rotor_diameter_m);
    motor_model_.figure_of_merit = config_.motors.figure_of_merit;
    motor_model_.eta_propel = config_.motors.eta_propel;

    power_.add_current_load(kCameraComponent, "camera_rail", config_.camera.rail_v);
    power_.add_current_load(kSocComponent, "soc_rail", config_.soc.rail_v);
    power_.add_power_load(kMotorComponent, "motor_rail");
    power_.set_current(kCameraComponent, config_.camera.idle_ma);
    power_.set_current(kSocComponent, config_.soc.idle_ma);
    power_.set_power(kMotorComponent, 0.0);

    bus_.map_region("camera_status", config_.vp.camera_status_addr, 16, camera_);
    static_assert(CameraPeripheral::kFrameWidth * CameraPeripheral::kFrameHeight == 102400);
    frame_region_ = std::make_unique<FrameBufferRegion>(camera_);
    bus_.map_region("camera_frame", config_.vp.frame_buffer_addr, 102400, *frame_region_);
    bus_.map_region("motor_cmd", config_.vp.motor_addr, 3 * sizeof(double), motors_);

    bus_.on_latency = [this](std::uint64_t us) { advance_vp(us); };
}

void Platform::advance_vp(std::uint64_t delta_us) {
    if (delta_us == 0) return;
    sync_.advance_vp(delta_us);
    if (!power_.exhausted()) power_.accrue(delta_us);
}

wire::Packet Platform::transact(const std::string& opcode, std::optional<wire::Json> payload) {
    return sync_.transact(opcode, std::move(payload));
}

std::vector<std::uint8_t> Platform::bus_read(std::uint64_t addr, std::size_t len) {
    return bus_.read(addr, len);
}

void Platform::bus_write(std::uint64_t addr, std::span<const std::uint8_t> data) {
    bus_.write(addr, data);
}

void Platform::set_motor_load(double v_mps, bool airborne) {
    power_.set_power(kMotorComponent,
                     energy::total_motor_power(motor_model_, v_mps, airborne) * 1000.0);
}

void Platform::set_camera_active(bool active) {
    power_.set_current(kCameraComponent,
                       active ? config_.camera.active_ma : config_.camera.idle_ma);
}

void Platform::set_soc_active(bool active) {
    power_.set_current(kSocComponent, active ? config_.soc.active_ma : config_.soc.idle_ma);
}

} // namespace cosim::vp
