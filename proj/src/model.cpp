#include "bellsim/model.hpp"

namespace bellsim {

int card_value(Card card, AdamSetting setting, const ValueAssignment& va) {
    return setting == AdamSetting::Color ? va(label_of(color_of(card)))
                                         : va(label_of(value_of(card)));
}

int object_value(ObjectKind object, EveSetting setting, const ValueAssignment& va) {
    return setting == EveSetting::Weight ? va(label_of(weight_of(object)))
                                         : va(label_of(shape_of(object)));
}

DecisionTable DecisionTable::default_table() {
    DecisionTable t;
    for (int oi = 0; oi < kObjectCount; ++oi) {
        const ObjectKind o = object_at(oi);
        const bool heavy = weight_of(o) == ObjectWeight::Heavy;
        const bool sphere = shape_of(o) == ObjectShape::Sphere;
        t.set(Side::Left, Side::Left, o, heavy ? 0 : 1);
        t.set(Side::Left, Side::Right, o, sphere ? 0 : 1);
        t.set(Side::Right, Side::Left, o, heavy ? 2 : 3);
        t.set(Side::Right, Side::Right, o, sphere ? 3 : 2);
    }
    return t;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& f : findings) {
        if (!out.empty()) out += "; ";
        out += f.location + ": " + f.message;
    }
    return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("model validation failed: " + report.summary()),
      report_(std::move(report)) {}

namespace {

void check_distribution(const std::array<ExactNumber, 4>& p, const std::string& where,
                        const char* const names[4], ValidationReport& out) {
    ExactNumber sum;
    for (int i = 0; i < 4; ++i) {
        if (p[i].sign() < 0)
            out.findings.push_back({where + "." + names[i],
                                    "negative probability " + p[i].str()});
        sum += p[i];
    }
    if (sum != ExactNumber(1))
        out.findings.push_back({where, "probabilities sum to " + sum.str() + ", expected 1"});
}

const char* const kCardNames[4] = {"BK", "BQ", "RK", "RQ"};
const char* const kObjectNames[4] = {"HS", "LS", "HC", "LC"};
const char* const kLabelNames[8] = {"B", "K", "H", "S", "R", "Q", "L", "C"};

}  // namespace

ValidationReport validate_model(const DeckTable& decks, const ObjectDistribution& objects,
                                const DecisionTable& decisions) {
    ValidationReport out;
    for (int d = 0; d < kDeckCount; ++d)
        check_distribution(decks.deck[d].p, "decks.D" + std::to_string(d + 1),
                           kCardNames, out);
    check_distribution(objects.p, "objects", kObjectNames, out);
    for (int a = 0; a < 2; ++a)
        for (int e = 0; e < 2; ++e)
            for (int oi = 0; oi < kObjectCount; ++oi) {
                const auto deck = decisions(static_cast<Side>(a), static_cast<Side>(e),
                                            object_at(oi));
                if (deck >= kDeckCount)
                    out.findings.push_back(
                        {"decisions[" + name_of(static_cast<Side>(a)) + "," +
                             name_of(static_cast<Side>(e)) + "," + kObjectNames[oi] + "]",
                         "deck index " + std::to_string(deck + 1) + " out of range 1..4"});
            }
    return out;
}

ValidationReport validate_values(const ValueAssignment& values) {
    ValidationReport out;
    for (int i = 0; i < kLabelCount; ++i)
        if (values.sign[i] != 1 && values.sign[i] != -1)
            out.findings.push_back({std::string("values.") + kLabelNames[i],
                                    "must map to +1 or -1, got " +
                                        std::to_string(values.sign[i])});
    return out;
}

DeckTable tsirelson_decks() {
    // (1 - sqrt(2)/2)/4 = 1/4 - sqrt(2)/8 and (1 + sqrt(2)/2)/4 = 1/4 + sqrt(2)/8
    const ExactNumber m(Rational(1, 4), Rational(-1, 8));
    const ExactNumber p(Rational(1, 4), Rational(1, 8));
    DeckTable t;
    t.deck[0].p = {m, m, p, p};
    t.deck[1].p = {p, p, m, m};
    t.deck[2].p = {m, p, m, p};
    t.deck[3].p = {p, m, p, m};
    return t;
}

DeckTable algebraic_max_decks() {
    const ExactNumber h(Rational(1, 2));
    const ExactNumber z;
    DeckTable t;
    t.deck[0].p = {z, z, h, h};
    t.deck[1].p = {h, h, z, z};
    t.deck[2].p = {z, h, z, h};
    t.deck[3].p = {h, z, h, z};
    return t;
}

std::string name_of(Card c) { return kCardNames[index_of(c)]; }
std::string name_of(ObjectKind o) { return kObjectNames[index_of(o)]; }
std::string name_of(Side s) { return s == Side::Left ? "left" : "right"; }
std::string name_of(AdamSetting a) { return a == AdamSetting::Color ? "color" : "value"; }
std::string name_of(EveSetting e) { return e == EveSetting::Weight ? "weight" : "shape"; }
std::string name_of(OutcomeLabel l) { return kLabelNames[static_cast<int>(l)]; }

}  // namespace bellsim
