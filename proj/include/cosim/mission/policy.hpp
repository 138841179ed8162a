#pragma once
// Speed policies: fixed cruise speed, or the adaptive rule that averages the
// last 10 yaw predictions and slows down while the gate is off center.

#include <deque>

#include <cosim/config.hpp>

namespace cosim::mission {

class AdaptivePolicyState {
public:
    explicit AdaptivePolicyState(const MissionConfig& cfg)
        : v_max_(cfg.v_max_kmh), v_floor_(cfg.v_floor_kmh), decrement_(cfg.decrement_kmh),
          threshold_(cfg.yaw_avg_threshold), history_len_(cfg.history_len),
          v_current_(cfg.v_max_kmh) {}

    // Push one prediction, update and return the commanded speed in km/h.
    double update(double yaw_prediction);

    double v_current_kmh() const { return v_current_; }
    double history_average() const;

private:
    double v_max_;
    double v_floor_;
    double decrement_;
    double threshold_;
    int history_len_;
    double v_current_;
    std::deque<double> history_;
};

class SpeedController {
public:
    SpeedController(const MissionConfig& cfg)
        : policy_(cfg.policy), v_constant_(cfg.v_kmh), adaptive_(cfg) {}

    double next_kmh(double yaw_prediction) {
        if (policy_ == SpeedPolicy::adaptive) return adaptive_.update(yaw_prediction);
        return v_constant_;
    }

private:
    SpeedPolicy policy_;
    double v_constant_;
    AdaptivePolicyState adaptive_;
};

} // namespace cosim::mission
