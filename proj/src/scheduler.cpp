#include "bellsim/scheduler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bellsim {

void validate_clock(const ClockConfig& clock) {
    if (!(clock.eve_period > 0.0))
        throw std::invalid_argument("eve_period must be positive");
    if (!(clock.adam_period > 0.0))
        throw std::invalid_argument("adam_period must be positive");
    if (clock.adam_period != 4.0 * clock.eve_period)
        throw std::invalid_argument("adam_period must equal exactly 4 * eve_period");
    if (!(clock.sample_interval > 0.0))
        throw std::invalid_argument("sample_interval must be positive");
    if (!std::isfinite(clock.phase))
        throw std::invalid_argument("phase must be finite");
}

Side pendulum_side(double period, double phase, double t) {
    if (!(period > 0.0))
        throw std::invalid_argument("pendulum period must be positive");
    double m = std::fmod(t + phase, period);
    if (m < 0.0) m += period;
    return m < period * 0.5 ? Side::Left : Side::Right;
}

double measurement_time(const ClockConfig& clock, std::uint64_t n) {
    return static_cast<double>(n) * clock.sample_interval + clock.phase;
}

double emission_time(const ClockConfig& clock, std::uint64_t n) {
    return measurement_time(clock, n) - clock.adam_period;
}

TrialSettings settings_for_trial(const ClockConfig& clock, std::uint64_t n) {
    if (n >= clock.trial_count)
        throw std::out_of_range("trial index " + std::to_string(n) +
                                " out of range, trial_count=" +
                                std::to_string(clock.trial_count));
    const double t = measurement_time(clock, n);
    const Side adam = pendulum_side(clock.adam_period, 0.0, t);
    const Side eve = pendulum_side(clock.eve_period, 0.0, t);
    return {adam_setting_for(adam), eve_setting_for(eve), adam, eve};
}

}  // namespace bellsim
