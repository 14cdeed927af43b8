#pragma once

// Random rules and matches shared by the rewriting suites.

#include <optional>

#include "monograph/attributed.hpp"
#include "monograph/document.hpp"
#include "monograph/random.hpp"
#include "monograph/rewriting.hpp"

namespace gen {

using monograph::Monograph;
using monograph::Morphism;
using monograph::Rng;
using monograph::SpanRule;

// K, then L and R as random extensions of K reached by arbitrary (not
// necessarily injective) morphisms.
SpanRule random_rule(Rng& rng, std::size_t max_interface = 3, std::size_t max_extra = 2);

// A host extending the left-hand side and a random morphism into it.
Morphism random_match(Rng& rng, const SpanRule& rule, std::size_t max_extra = 2);

// Both of the above, retried until the gluing condition holds.
std::pair<SpanRule, Morphism> random_applicable(Rng& rng);

// Renames every edge of m by appending `suffix` and reversing lexicographic
// order, so iteration visits edges differently.
Morphism scramble(const Monograph& m, const std::string& suffix);

// Every ATM over the two-attribute type {e -> s, s -> e} with data carrier
// {a, b}: the attributes a and b plus 1..max_e e-typed edges e0, e1, ...
std::vector<monograph::Atm> atm_universe(std::size_t max_e);

// The ATM carried by the closed part `edges` of x's graph.
monograph::Atm sub_atm(const monograph::Atm& x, const monograph::EdgeSet& edges);

struct AtmInstance {
  monograph::AtmRule rule;
  Morphism match;
};
// Injective rule deleting and adding e-typed edges not referenced by an
// attribute, matched by inclusion into `host`; every morphism stabilizes.
AtmInstance random_stabilizing_rule(Rng& rng, const monograph::Atm& host);

// Documents with every declaration kind; some names need quoting.
monograph::Document random_document(Rng& rng);

}  // namespace gen
