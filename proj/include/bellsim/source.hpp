#pragma once

#include "bellsim/model.hpp"
#include "bellsim/rng.hpp"

namespace bellsim {

// The source ("object mound" + decks + decision rule) and the value map the
// two stations apply.
struct SourceModel {
    DeckTable decks;
    ObjectDistribution objects = ObjectDistribution::uniform();
    DecisionTable decisions = DecisionTable::default_table();
    ValueAssignment values = ValueAssignment::defaults();

    friend bool operator==(const SourceModel&, const SourceModel&) = default;
};

enum class Preset { Tsirelson2Sqrt2, AlgebraicMax4 };

SourceModel preset_model(Preset preset);

ValidationReport validate_model(const SourceModel& model);

// Throws ValidationError when the model has findings.
void require_valid(const SourceModel& model);

// Deck index 0..3 chosen from the pendulum sides and the drawn object.
int select_deck(const DecisionTable& decisions, Side adam_side, Side eve_side,
                ObjectKind object);

// Inverse-CDF samples over the canonical orders; one uniform variate each.
ObjectKind draw_object(const ObjectDistribution& objects, const RngStream& rng);
Card draw_card(const DeckDistribution& deck, const RngStream& rng);

struct Outcome {
    OutcomeLabel label = OutcomeLabel::B;
    int value = 0;  // +1 or -1
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

Outcome measure_adam(Card card, AdamSetting setting, const ValueAssignment& va);
Outcome measure_eve(ObjectKind object, EveSetting setting, const ValueAssignment& va);

}  // namespace bellsim
