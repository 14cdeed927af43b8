#pragma once

#include "monograph/morphism.hpp"

namespace monograph {

// Edges of the left summand are tagged ".0", of the right ".1".
struct Coproduct {
  Monograph object;
  Morphism left;
  Morphism right;
};
Coproduct coproduct(const Monograph& a, const Monograph& b);

// Each class of the generated equivalence is named after its least member.
struct Coequalizer {
  Monograph object;
  Morphism quotient;
};
// Throws NotParallel.
Coequalizer coequalizer(const Morphism& f, const Morphism& g);

// Pushout of B <-f- A -g-> C; left: B -> Q, right: C -> Q.
struct Pushout {
  Monograph object;
  Morphism left;
  Morphism right;
};
// Throws PreconditionViolated if f and g have different domains.
Pushout pushout(const Morphism& f, const Morphism& g);

// Pair edges are named "(x,y)".
struct Product {
  Monograph object;
  Morphism left;
  Morphism right;
};
Product product(const Monograph& a, const Monograph& b);

struct Equalizer {
  Monograph object;
  Morphism inclusion;
};
Equalizer equalizer(const Morphism& f, const Morphism& g);

// Pullback of B -f-> D <-g- C; left: P -> B, right: P -> C.
struct Pullback {
  Monograph object;
  Morphism left;
  Morphism right;
};
Pullback pullback(const Morphism& f, const Morphism& g);

Monograph initial();

// Terminal object among standard O-monographs: the edge named after each
// length in O maps to that many copies of node "0". Empty unless 0 is in O.
Monograph terminal(const Trace& allowed);

// The unique morphism into terminal(allowed): each edge goes to its length.
// Throws NotStandard or TraceEscapesO.
Morphism bang(const Monograph& m, const Trace& allowed);

// Isomorphic copy with edges renamed; names must be total and injective.
Morphism relabel(const Monograph& m, const EdgeMap& names);

std::string pair_name(const EdgeId& x, const EdgeId& y);

}  // namespace monograph
