#pragma once

#include <array>
#include <cstdint>

#include "bellsim/analysis.hpp"

namespace bellsim {

// One point-mass deck composition per deck: 4^4 = 256 vertices of the
// product of simplices.
struct VertexAssignment {
    std::array<std::uint8_t, kDeckCount> card_for_deck{};
    friend bool operator==(const VertexAssignment&, const VertexAssignment&) = default;
};

DeckTable vertex_decks(const VertexAssignment& assignment);

struct OptimizationResult {
    ExactNumber best_e;
    DeckTable witness;
    VertexAssignment assignment;
    std::uint64_t enumerated = 0;
};

// Evaluates the CHSH parameter at every vertex and returns the maximum.
// The inner combination is linear in each deck row, so the maximum over
// the whole product of simplices is attained at one of these vertices.
// Ties resolve to the lexicographically smallest assignment.
OptimizationResult maximize_chsh(const DecisionTable& decisions,
                                 const ObjectDistribution& objects,
                                 const ValueAssignment& values);

// Maximum of |A_c E_w + A_c E_s + A_v E_w - A_v E_s| over the 16 deterministic
// (card, object) atoms with a setting-independent source: the classical bound.
ExactNumber local_bound(const ValueAssignment& values);

// Seeded sample of interior (strictly mixed) deck tables; returns the best
// CHSH value found. Sanity probe for vertex optimality.
ExactNumber random_mixture_probe(const DecisionTable& decisions,
                                 const ObjectDistribution& objects,
                                 const ValueAssignment& values,
                                 std::uint64_t samples, std::uint64_t seed);

}  // namespace bellsim
