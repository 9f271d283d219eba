#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bellsim/runner.hpp"

namespace bellsim {

// P(o_a, o_b | a, b) over the four sign pairs for one fixed setting pair,
// in the order (+,+), (+,-), (-,+), (-,-).
struct JointDistribution {
    std::array<ExactNumber, 4> p{};

    static constexpr int slot(int oa, int ob) {
        return (oa < 0 ? 2 : 0) + (ob < 0 ? 1 : 0);
    }
    ExactNumber& at(int oa, int ob) { return p[slot(oa, ob)]; }
    const ExactNumber& at(int oa, int ob) const { return p[slot(oa, ob)]; }

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;
};

// Either an exact correlator (exact set, std_error = 0, samples = 0) or an
// empirical estimate with its standard error and sample count.
struct CorrelatorReport {
    SettingPair pair;
    std::optional<ExactNumber> exact;
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

struct ChshReport {
    std::array<CorrelatorReport, 4> correlators{};  // canonical pair order
    std::optional<ExactNumber> exact_e;
    double e = 0.0;
    double uncertainty = 0.0;
};

class UnderSampledError : public std::runtime_error {
public:
    UnderSampledError(SettingPair pair, std::uint64_t count)
        : std::runtime_error("setting pair (" + name_of(pair.adam) + ", " +
                             name_of(pair.eve) + ") under-sampled: " +
                             std::to_string(count) + " trials, need at least 2"),
          pair_(pair),
          count_(count) {}
    SettingPair pair() const { return pair_; }
    std::uint64_t count() const { return count_; }

private:
    SettingPair pair_;
    std::uint64_t count_;
};

// Exact path: sums ObjectDistribution x deck-row weights over all
// (object, card) atoms in ExactNumber arithmetic.
JointDistribution exact_joint(const SourceModel& model, Side adam_side, Side eve_side);

ExactNumber exact_correlator(const SourceModel& model, SettingPair pair);

// E = |C(c,w) + C(c,s) + C(v,w) - C(v,s)|, exact.
ChshReport chsh_exact(const SourceModel& model);

// Empirical path: sample mean of o_a * o_b over trials with the given pair;
// standard error sqrt((1 - mean^2)/(n - 1)). Throws UnderSampledError when
// fewer than 2 matching trials exist.
CorrelatorReport estimate_correlator(const TrialLog& log, SettingPair pair);

// Uncertainty is the root-sum-square of the four standard errors.
ChshReport chsh_estimate(const TrialLog& log);

// One station's exact P(outcome = +1) under both remote settings.
struct MarginalCheck {
    std::string station;        // "adam" | "eve"
    std::string local_setting;  // "color" | "value" | "weight" | "shape"
    ExactNumber p_plus_remote_left;
    ExactNumber p_plus_remote_right;
    ExactNumber difference;
};

struct NoSignalingReport {
    std::array<MarginalCheck, 4> checks{};
    bool all_zero = false;
};

NoSignalingReport no_signaling_report(const SourceModel& model);

// Which hidden state the dependence metrics condition on.
enum class HiddenScope { DeckOnly, FullState };

// Assumes equally frequent setting pairs (the default cadence provides
// exactly 1/4 each). TV is the mean total-variation distance between
// P(hidden | pair) and the hidden marginal; MI is I(pair; hidden) in bits.
struct MeasurementDependence {
    ExactNumber tv;
    double mi_bits = 0.0;
};

MeasurementDependence measurement_dependence(const SourceModel& model,
                                             HiddenScope scope = HiddenScope::DeckOnly);

// Quantum singlet correlator -cos(angle_a - angle_b); reference oracle for
// comparing the exact model correlators against quantum values.
double singlet_reference(double angle_a, double angle_b);

}  // namespace bellsim
