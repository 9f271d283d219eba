#include "bellsim/analysis.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace bellsim {

namespace detail {

JointDistribution exact_joint_unchecked(const SourceModel& model, Side adam_side,
                                        Side eve_side) {
    const AdamSetting as = adam_setting_for(adam_side);
    const EveSetting es = eve_setting_for(eve_side);
    JointDistribution joint;
    for (int oi = 0; oi < kObjectCount; ++oi) {
        const ObjectKind object = object_at(oi);
        const int deck = select_deck(model.decisions, adam_side, eve_side, object);
        const int ob = object_value(object, es, model.values);
        for (int ci = 0; ci < kCardCount; ++ci) {
            const int oa = card_value(card_at(ci), as, model.values);
            joint.at(oa, ob) += model.objects.p[oi] * model.decks.deck[deck].p[ci];
        }
    }
    return joint;
}

ExactNumber correlator_of(const JointDistribution& joint) {
    return joint.at(+1, +1) - joint.at(+1, -1) - joint.at(-1, +1) + joint.at(-1, -1);
}

ChshReport chsh_exact_unchecked(const SourceModel& model) {
    ChshReport report;
    ExactNumber combo;
    for (int k = 0; k < 4; ++k) {
        const SettingPair pair = kSettingPairs[k];
        const ExactNumber c = correlator_of(exact_joint_unchecked(
            model, side_for(pair.adam), side_for(pair.eve)));
        report.correlators[k] = {pair, c, c.to_double(), 0.0, 0};
        combo += (k == 3) ? -c : c;
    }
    report.exact_e = combo.abs();
    report.e = report.exact_e->to_double();
    report.uncertainty = 0.0;
    return report;
}

}  // namespace detail

JointDistribution exact_joint(const SourceModel& model, Side adam_side, Side eve_side) {
    require_valid(model);
    return detail::exact_joint_unchecked(model, adam_side, eve_side);
}

ExactNumber exact_correlator(const SourceModel& model, SettingPair pair) {
    require_valid(model);
    return detail::correlator_of(detail::exact_joint_unchecked(
        model, side_for(pair.adam), side_for(pair.eve)));
}

ChshReport chsh_exact(const SourceModel& model) {
    require_valid(model);
    return detail::chsh_exact_unchecked(model);
}

CorrelatorReport estimate_correlator(const TrialLog& log, SettingPair pair) {
    std::int64_t sum = 0;
    std::uint64_t n = 0;
    for (const TrialRecord& r : log.records) {
        if (r.adam_setting != pair.adam || r.eve_setting != pair.eve) continue;
        sum += std::int64_t(r.adam_outcome.value) * r.eve_outcome.value;
        ++n;
    }
    if (n < 2) throw UnderSampledError(pair, n);
    const double mean = static_cast<double>(sum) / static_cast<double>(n);
    const double var = std::max(0.0, 1.0 - mean * mean);
    const double se = std::sqrt(var / static_cast<double>(n - 1));
    CorrelatorReport report;
    report.pair = pair;
    report.value = mean;
    report.std_error = se;
    report.samples = n;
    return report;
}

ChshReport chsh_estimate(const TrialLog& log) {
    ChshReport report;
    double combo = 0.0;
    double var = 0.0;
    for (int k = 0; k < 4; ++k) {
        report.correlators[k] = estimate_correlator(log, kSettingPairs[k]);
        combo += (k == 3) ? -report.correlators[k].value : report.correlators[k].value;
        var += report.correlators[k].std_error * report.correlators[k].std_error;
    }
    report.e = std::fabs(combo);
    report.uncertainty = std::sqrt(var);
    return report;
}

NoSignalingReport no_signaling_report(const SourceModel& model) {
    require_valid(model);
    NoSignalingReport out;
    // Adam's P(+1) with Eve's pendulum Left vs Right, for each of his sides.
    for (int a = 0; a < 2; ++a) {
        const Side adam_side = static_cast<Side>(a);
        ExactNumber p[2];
        for (int e = 0; e < 2; ++e) {
            const JointDistribution j = detail::exact_joint_unchecked(
                model, adam_side, static_cast<Side>(e));
            p[e] = j.at(+1, +1) + j.at(+1, -1);
        }
        out.checks[a] = {"adam", name_of(adam_setting_for(adam_side)), p[0], p[1],
                         p[0] - p[1]};
    }
    for (int e = 0; e < 2; ++e) {
        const Side eve_side = static_cast<Side>(e);
        ExactNumber p[2];
        for (int a = 0; a < 2; ++a) {
            const JointDistribution j = detail::exact_joint_unchecked(
                model, static_cast<Side>(a), eve_side);
            p[a] = j.at(+1, +1) + j.at(-1, +1);
        }
        out.checks[2 + e] = {"eve", name_of(eve_setting_for(eve_side)), p[0], p[1],
                             p[0] - p[1]};
    }
    out.all_zero = true;
    for (const auto& c : out.checks)
        if (c.difference != ExactNumber(0)) out.all_zero = false;
    return out;
}

MeasurementDependence measurement_dependence(const SourceModel& model, HiddenScope scope) {
    require_valid(model);

    // Hidden-state distribution per setting pair. DeckOnly keys on the deck
    // index; FullState keys on (deck, object, card).
    std::vector<std::map<int, ExactNumber>> conditional(4);
    for (int k = 0; k < 4; ++k) {
        const SettingPair pair = kSettingPairs[k];
        const Side a = side_for(pair.adam), e = side_for(pair.eve);
        for (int oi = 0; oi < kObjectCount; ++oi) {
            const int deck = select_deck(model.decisions, a, e, object_at(oi));
            if (scope == HiddenScope::DeckOnly) {
                conditional[k][deck] += model.objects.p[oi];
            } else {
                for (int ci = 0; ci < kCardCount; ++ci)
                    conditional[k][(deck * kObjectCount + oi) * kCardCount + ci] +=
                        model.objects.p[oi] * model.decks.deck[deck].p[ci];
            }
        }
    }

    const ExactNumber quarter(Rational(1, 4));
    std::map<int, ExactNumber> marginal;
    for (const auto& cond : conditional)
        for (const auto& [key, prob] : cond) marginal[key] += quarter * prob;

    MeasurementDependence out;
    ExactNumber tv_sum;
    for (const auto& cond : conditional) {
        ExactNumber l1;
        for (const auto& [key, marg] : marginal) {
            const auto it = cond.find(key);
            const ExactNumber p = it == cond.end() ? ExactNumber(0) : it->second;
            l1 += (p - marg).abs();
        }
        tv_sum += ExactNumber(Rational(1, 2)) * l1;
    }
    out.tv = quarter * tv_sum;

    double mi = 0.0;
    for (const auto& cond : conditional)
        for (const auto& [key, prob] : cond) {
            const double joint = 0.25 * prob.to_double();
            if (joint <= 0.0) continue;
            mi += joint * std::log2(joint / (0.25 * marginal[key].to_double()));
        }
    out.mi_bits = mi;
    return out;
}

double singlet_reference(double angle_a, double angle_b) {
    return -std::cos(angle_a - angle_b);
}

}  // namespace bellsim
