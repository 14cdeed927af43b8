#pragma once

// Universal-property checks against every competing (co)cone into, or out
// of, a list of test objects. Each returns an empty string on success and a
// description of the first counterexample otherwise.

#include <string>
#include <vector>

#include "oracles.hpp"

namespace oracle {

std::string check_coproduct(const Morphism& left, const Morphism& right,
                            const std::vector<Monograph>& tests);
std::string check_coequalizer(const Morphism& f, const Morphism& g, const Morphism& c,
                              const std::vector<Monograph>& tests);
// Square h.f = k.g with f: A -> B, g: A -> C.
std::string check_pushout(const Morphism& f, const Morphism& g, const Morphism& h, const Morphism& k,
                          const std::vector<Monograph>& tests);
std::string check_product(const Morphism& p1, const Morphism& p2, const std::vector<Monograph>& tests);
std::string check_equalizer(const Morphism& f, const Morphism& g, const Morphism& e,
                            const std::vector<Monograph>& tests);
// Square f.p = g.q with f: B -> D, g: C -> D.
std::string check_pullback(const Morphism& f, const Morphism& g, const Morphism& p, const Morphism& q,
                           const std::vector<Monograph>& tests);

// Pointwise composite of raw maps, second after first.
EdgeMap then(const EdgeMap& first, const EdgeMap& second);

}  // namespace oracle
