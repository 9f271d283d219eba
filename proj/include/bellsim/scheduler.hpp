#pragma once

#include <cstdint>

#include "bellsim/model.hpp"

namespace bellsim {

// Abstract square-wave clocks. Adam's pendulum must run at exactly four
// times Eve's period; the default cadence of one trial per half Eve-period
// makes all four setting pairs equally frequent.
struct ClockConfig {
    double eve_period = 1.0;
    double adam_period = 4.0;
    double sample_interval = 0.5;
    double phase = 0.0;
    std::uint64_t trial_count = 0;
};

// Throws std::invalid_argument on non-positive periods/cadence or when
// adam_period != 4 * eve_period.
void validate_clock(const ClockConfig& clock);

// A pendulum is Left during the first half of its cycle, Right during the
// second; boundary instants belong to the half-open interval on their left.
Side pendulum_side(double period, double phase, double t);

struct TrialSettings {
    AdamSetting adam = AdamSetting::Color;
    EveSetting eve = EveSetting::Weight;
    Side adam_side = Side::Left;
    Side eve_side = Side::Left;
    friend bool operator==(const TrialSettings&, const TrialSettings&) = default;
};

double measurement_time(const ClockConfig& clock, std::uint64_t n);

// The source emits one Adam-period before the measurement, so its deck
// choice can (and does) use the settings of trial n itself.
double emission_time(const ClockConfig& clock, std::uint64_t n);

// Pure function of (clock, n); throws std::out_of_range for n >= trial_count.
TrialSettings settings_for_trial(const ClockConfig& clock, std::uint64_t n);

}  // namespace bellsim
