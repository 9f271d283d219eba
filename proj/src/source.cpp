#include "bellsim/source.hpp"

namespace bellsim {

SourceModel preset_model(Preset preset) {
    SourceModel m;
    m.decks = preset == Preset::Tsirelson2Sqrt2 ? tsirelson_decks() : algebraic_max_decks();
    return m;
}

ValidationReport validate_model(const SourceModel& model) {
    ValidationReport out = validate_model(model.decks, model.objects, model.decisions);
    ValidationReport values = validate_values(model.values);
    out.findings.insert(out.findings.end(), values.findings.begin(), values.findings.end());
    return out;
}

void require_valid(const SourceModel& model) {
    ValidationReport report = validate_model(model);
    if (!report.ok()) throw ValidationError(std::move(report));
}

int select_deck(const DecisionTable& decisions, Side adam_side, Side eve_side,
                ObjectKind object) {
    return decisions(adam_side, eve_side, object);
}

namespace {

int inverse_cdf_index(const std::array<ExactNumber, 4>& p, double u) {
    double cdf = 0.0;
    for (int i = 0; i < 3; ++i) {
        cdf += p[i].to_double();
        if (u < cdf) return i;
    }
    return 3;
}

}  // namespace

ObjectKind draw_object(const ObjectDistribution& objects, const RngStream& rng) {
    return object_at(inverse_cdf_index(objects.p, rng.uniform()));
}

Card draw_card(const DeckDistribution& deck, const RngStream& rng) {
    return card_at(inverse_cdf_index(deck.p, rng.uniform()));
}

Outcome measure_adam(Card card, AdamSetting setting, const ValueAssignment& va) {
    const OutcomeLabel label = setting == AdamSetting::Color
                                   ? label_of(color_of(card))
                                   : label_of(value_of(card));
    return {label, va(label)};
}

Outcome measure_eve(ObjectKind object, EveSetting setting, const ValueAssignment& va) {
    const OutcomeLabel label = setting == EveSetting::Weight
                                   ? label_of(weight_of(object))
                                   : label_of(shape_of(object));
    return {label, va(label)};
}

}  // namespace bellsim
