#pragma once

#include <cstdint>
#include <vector>

#include "bellsim/scheduler.hpp"
#include "bellsim/source.hpp"

namespace bellsim {

// One experiment round. Hidden variables (deck, card, object) are stored
// next to the outcomes so analyses can open the mechanism; a blinded export
// that drops them is available in the log writer.
struct TrialRecord {
    std::uint64_t n = 0;
    double t = 0.0;
    double emission_t = 0.0;
    AdamSetting adam_setting = AdamSetting::Color;
    EveSetting eve_setting = EveSetting::Weight;
    Side adam_side = Side::Left;
    Side eve_side = Side::Left;
    std::uint8_t deck = 0;  // 0..3; serialized as 1..4
    Card card = Card::BlackKing;
    ObjectKind object = ObjectKind::HeavySphere;
    Outcome adam_outcome;
    Outcome eve_outcome;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ExperimentConfig {
    ClockConfig clock;
    SourceModel model;
    std::uint64_t seed = 0;
    std::uint64_t trial_count = 0;
};

struct TrialLog {
    std::vector<TrialRecord> records;
    bool blinded = false;
};

// Deterministic in (config, n); throws std::out_of_range for n >= trial_count.
TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t n);

// Runs trials 0..trial_count-1, ordered by n. workers = 0 consults
// BELL_NUM_WORKERS (default 1); the result is identical for any worker count.
TrialLog run_experiment(const ExperimentConfig& config, unsigned workers = 0);

// True if the record's outcomes and deck choice re-derive from its own
// hidden variables and settings under the given model.
bool replay_consistent(const TrialRecord& record, const SourceModel& model);

unsigned workers_from_env();

}  // namespace bellsim
