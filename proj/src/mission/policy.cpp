#include <cosim/mission/policy.hpp>

#include <cmath>
#include <numeric>

namespace cosim::mission {

double AdaptivePolicyState::history_average() const {
    if (history_.empty()) return 0.0;
    const double sum = std::accumulate(history_.begin(), history_.end(), 0.0);
    return sum / static_cast<double>(history_.size());
}

double AdaptivePolicyState::update(double yaw_prediction) {
    history_.push_back(yaw_prediction);
    while (static_cast<int>(history_.size()) > history_len_) history_.pop_front();

    // full speed while the gate is centered, back off while it is not
    if (std::abs(history_average()) <= threshold_)
        v_current_ = v_max_;
    else
        v_current_ = std::max(v_current_ - decrement_, v_floor_);
    return v_current_;
}

} // namespace cosim::mission
