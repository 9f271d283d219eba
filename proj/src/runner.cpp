#include "bellsim/runner.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace bellsim {

namespace {

ClockConfig synced_clock(const ExperimentConfig& config) {
    ClockConfig clock = config.clock;
    clock.trial_count = config.trial_count;
    return clock;
}

TrialRecord run_trial_impl(const ExperimentConfig& config, const ClockConfig& clock,
                           std::uint64_t n) {
    TrialRecord r;
    r.n = n;
    r.t = measurement_time(clock, n);
    r.emission_t = emission_time(clock, n);
    const TrialSettings s = settings_for_trial(clock, n);
    r.adam_setting = s.adam;
    r.eve_setting = s.eve;
    r.adam_side = s.adam_side;
    r.eve_side = s.eve_side;
    // The source acts at emission time but the clocks are deterministic, so
    // the settings it reads one Adam-period ahead are exactly trial n's.
    r.object = draw_object(config.model.objects, RngStream(config.seed, n, kSlotObject));
    r.deck = static_cast<std::uint8_t>(
        select_deck(config.model.decisions, s.adam_side, s.eve_side, r.object));
    r.card = draw_card(config.model.decks.deck[r.deck],
                       RngStream(config.seed, n, kSlotCard));
    r.adam_outcome = measure_adam(r.card, s.adam, config.model.values);
    r.eve_outcome = measure_eve(r.object, s.eve, config.model.values);
    return r;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t n) {
    if (n >= config.trial_count)
        throw std::out_of_range("trial index " + std::to_string(n) +
                                " out of range, trial_count=" +
                                std::to_string(config.trial_count));
    const ClockConfig clock = synced_clock(config);
    validate_clock(clock);
    require_valid(config.model);
    return run_trial_impl(config, clock, n);
}

unsigned workers_from_env() {
    const char* env = std::getenv("BELL_NUM_WORKERS");
    if (env == nullptr) return 1;
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<unsigned>(v);
}

TrialLog run_experiment(const ExperimentConfig& config, unsigned workers) {
    const ClockConfig clock = synced_clock(config);
    validate_clock(clock);
    require_valid(config.model);

    TrialLog log;
    log.records.resize(config.trial_count);
    if (config.trial_count == 0) return log;

    unsigned w = workers == 0 ? workers_from_env() : workers;
    if (w > config.trial_count) w = static_cast<unsigned>(config.trial_count);

    auto fill_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t n = begin; n < end; ++n)
            log.records[n] = run_trial_impl(config, clock, n);
    };

    if (w <= 1) {
        fill_range(0, config.trial_count);
        return log;
    }

    // Contiguous blocks; each worker writes disjoint slots indexed by n, so
    // the merged log is independent of scheduling.
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::uint64_t chunk = (config.trial_count + w - 1) / w;
    for (unsigned i = 0; i < w; ++i) {
        const std::uint64_t begin = std::uint64_t(i) * chunk;
        const std::uint64_t end = std::min(begin + chunk, config.trial_count);
        if (begin >= end) break;
        pool.emplace_back(fill_range, begin, end);
    }
    for (auto& th : pool) th.join();
    return log;
}

bool replay_consistent(const TrialRecord& record, const SourceModel& model) {
    const int deck = select_deck(model.decisions, record.adam_side, record.eve_side,
                                 record.object);
    if (deck != record.deck) return false;
    if (measure_adam(record.card, record.adam_setting, model.values) != record.adam_outcome)
        return false;
    return measure_eve(record.object, record.eve_setting, model.values) ==
           record.eve_outcome;
}

}  // namespace bellsim
