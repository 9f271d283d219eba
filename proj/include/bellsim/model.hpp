#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellsim/exact.hpp"

namespace bellsim {

// Hidden variables. Canonical card order is BK, BQ, RK, RQ and canonical
// object order is HS, LS, HC, LC; every table, file format and inverse-CDF
// sampler indexes in these orders.
enum class Card : std::uint8_t { BlackKing, BlackQueen, RedKing, RedQueen };
enum class ObjectKind : std::uint8_t { HeavySphere, LightSphere, HeavyCube, LightCube };

enum class CardColor : std::uint8_t { Black, Red };
enum class CardValue : std::uint8_t { King, Queen };
enum class ObjectWeight : std::uint8_t { Heavy, Light };
enum class ObjectShape : std::uint8_t { Sphere, Cube };

inline constexpr int kCardCount = 4;
inline constexpr int kObjectCount = 4;
inline constexpr int kDeckCount = 4;

constexpr int index_of(Card c) { return static_cast<int>(c); }
constexpr int index_of(ObjectKind o) { return static_cast<int>(o); }
constexpr Card card_at(int i) { return static_cast<Card>(i); }
constexpr ObjectKind object_at(int i) { return static_cast<ObjectKind>(i); }

constexpr CardColor color_of(Card c) {
    return index_of(c) < 2 ? CardColor::Black : CardColor::Red;
}
constexpr CardValue value_of(Card c) {
    return index_of(c) % 2 == 0 ? CardValue::King : CardValue::Queen;
}
constexpr ObjectWeight weight_of(ObjectKind o) {
    return index_of(o) % 2 == 0 ? ObjectWeight::Heavy : ObjectWeight::Light;
}
constexpr ObjectShape shape_of(ObjectKind o) {
    return index_of(o) < 2 ? ObjectShape::Sphere : ObjectShape::Cube;
}
constexpr Card make_card(CardColor color, CardValue value) {
    return card_at(2 * static_cast<int>(color) + static_cast<int>(value));
}
constexpr ObjectKind make_object(ObjectWeight weight, ObjectShape shape) {
    return object_at(2 * static_cast<int>(shape) + static_cast<int>(weight));
}

// Station settings. Adam's pendulum to the Left means he measures Color,
// Eve's pendulum to the Left means she measures Weight.
enum class AdamSetting : std::uint8_t { Color, Value };
enum class EveSetting : std::uint8_t { Weight, Shape };
enum class Side : std::uint8_t { Left, Right };

struct SettingPair {
    AdamSetting adam = AdamSetting::Color;
    EveSetting eve = EveSetting::Weight;
    friend bool operator==(const SettingPair&, const SettingPair&) = default;
};

// Canonical pair order (c,w), (c,s), (v,w), (v,s) -- the order the CHSH
// combination |C(c,w)+C(c,s)+C(v,w)-C(v,s)| reads its terms in.
inline constexpr std::array<SettingPair, 4> kSettingPairs = {{
    {AdamSetting::Color, EveSetting::Weight},
    {AdamSetting::Color, EveSetting::Shape},
    {AdamSetting::Value, EveSetting::Weight},
    {AdamSetting::Value, EveSetting::Shape},
}};

constexpr Side side_for(AdamSetting a) {
    return a == AdamSetting::Color ? Side::Left : Side::Right;
}
constexpr Side side_for(EveSetting e) {
    return e == EveSetting::Weight ? Side::Left : Side::Right;
}
constexpr AdamSetting adam_setting_for(Side s) {
    return s == Side::Left ? AdamSetting::Color : AdamSetting::Value;
}
constexpr EveSetting eve_setting_for(Side s) {
    return s == Side::Left ? EveSetting::Weight : EveSetting::Shape;
}

// Outcome labels in the order B, K, H, S (default +1), R, Q, L, C (default -1).
enum class OutcomeLabel : std::uint8_t { B, K, H, S, R, Q, L, C };

inline constexpr int kLabelCount = 8;

constexpr OutcomeLabel label_of(CardColor c) {
    return c == CardColor::Black ? OutcomeLabel::B : OutcomeLabel::R;
}
constexpr OutcomeLabel label_of(CardValue v) {
    return v == CardValue::King ? OutcomeLabel::K : OutcomeLabel::Q;
}
constexpr OutcomeLabel label_of(ObjectWeight w) {
    return w == ObjectWeight::Heavy ? OutcomeLabel::H : OutcomeLabel::L;
}
constexpr OutcomeLabel label_of(ObjectShape s) {
    return s == ObjectShape::Sphere ? OutcomeLabel::S : OutcomeLabel::C;
}

// Maps each outcome label to +1 or -1. Configurable so tests can exercise
// sign-flip symmetries; the default is +1 on {B,K,H,S} and -1 on {R,Q,L,C}.
struct ValueAssignment {
    std::array<std::int8_t, kLabelCount> sign{};

    static ValueAssignment defaults() {
        ValueAssignment va;
        for (int i = 0; i < kLabelCount; ++i) va.sign[i] = i < 4 ? +1 : -1;
        return va;
    }

    int operator()(OutcomeLabel label) const {
        return sign[static_cast<int>(label)];
    }

    friend bool operator==(const ValueAssignment&, const ValueAssignment&) = default;
};

int card_value(Card card, AdamSetting setting, const ValueAssignment& va);
int object_value(ObjectKind object, EveSetting setting, const ValueAssignment& va);

// One deck's distribution over the 4 cards, in canonical card order.
struct DeckDistribution {
    std::array<ExactNumber, kCardCount> p{};
    friend bool operator==(const DeckDistribution&, const DeckDistribution&) = default;
};

// Decks D1..D4 at indices 0..3.
struct DeckTable {
    std::array<DeckDistribution, kDeckCount> deck{};
    friend bool operator==(const DeckTable&, const DeckTable&) = default;
};

struct ObjectDistribution {
    std::array<ExactNumber, kObjectCount> p{};

    static ObjectDistribution uniform() {
        ObjectDistribution d;
        d.p.fill(ExactNumber(Rational(1, 4)));
        return d;
    }
    static ObjectDistribution point_mass(ObjectKind o) {
        ObjectDistribution d;
        d.p[index_of(o)] = ExactNumber(1);
        return d;
    }

    friend bool operator==(const ObjectDistribution&, const ObjectDistribution&) = default;
};

// Total map (adam side, eve side, object) -> deck index 0..3. The default
// instance is the paper-style rule where the object enters only through its
// weight when Eve's pendulum is Left and only through its shape when Right.
struct DecisionTable {
    std::array<std::uint8_t, 2 * 2 * kObjectCount> deck_for{};

    static DecisionTable default_table();

    static constexpr int slot(Side adam, Side eve, ObjectKind object) {
        return (static_cast<int>(adam) * 2 + static_cast<int>(eve)) * kObjectCount +
               index_of(object);
    }
    std::uint8_t operator()(Side adam, Side eve, ObjectKind object) const {
        return deck_for[slot(adam, eve, object)];
    }
    void set(Side adam, Side eve, ObjectKind object, std::uint8_t deck) {
        deck_for[slot(adam, eve, object)] = deck;
    }

    friend bool operator==(const DecisionTable&, const DecisionTable&) = default;
};

struct Finding {
    std::string location;
    std::string message;
};

// Validation never aborts; it accumulates one finding per violated rule.
struct ValidationReport {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
    std::string summary() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

ValidationReport validate_model(const DeckTable& decks, const ObjectDistribution& objects,
                                const DecisionTable& decisions);
ValidationReport validate_values(const ValueAssignment& values);

// Deck compositions of the two built-in presets.
DeckTable tsirelson_decks();  // rows mix (1 -/+ sqrt(2)/2)/4; CHSH reaches 2*sqrt(2)
DeckTable algebraic_max_decks();  // half/half point rows; CHSH reaches 4

// Display names ("BK", "HS", "left", "color", ...).
std::string name_of(Card c);
std::string name_of(ObjectKind o);
std::string name_of(Side s);
std::string name_of(AdamSetting a);
std::string name_of(EveSetting e);
std::string name_of(OutcomeLabel l);

}  // namespace bellsim
