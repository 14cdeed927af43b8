#pragma once

#include "monograph/rewriting.hpp"
#include "monograph/signature.hpp"

namespace monograph {

struct CombinedSignature {
  Signature graph;
  Signature data;
  Signature merged;  // graph sorts, then the data sorts not already present
  std::set<Sort> shared_sorts;
};
// Throws OperatorClash.
CombinedSignature combine_signatures(const Signature& graph, const Signature& data);

// Typed monograph plus a data algebra whose carrier at every sort that is
// also an edge of the type equals the typing fiber over that edge.
class Atm {
 public:
  // Throws CarrierMismatch naming the sort and both element sets.
  static Atm validate(Morphism typing, Algebra data);

  const Morphism& typing() const { return typing_; }
  const Monograph& graph() const { return typing_.dom(); }
  const Monograph& type() const { return typing_.cod(); }
  const Algebra& data() const { return data_; }
  std::set<Sort> shared_sorts() const;
  // Union of the carriers at shared sorts.
  EdgeSet attributes() const;

 private:
  Atm(Morphism typing, Algebra data) : typing_(std::move(typing)), data_(std::move(data)) {}
  Morphism typing_;
  Algebra data_;
};

Algebra atm_to_algebra(const Atm& x);
// Inverse direction up to isomorphism: shared-sort elements are renamed
// "elem@sort" to match the typed monograph built from the graph part.
Atm algebra_to_atm(const Algebra& combined, const Monograph& type, const Signature& data);

// Every attribute x has preimage exactly {x}.
bool stabilizes(const Morphism& f, const EdgeSet& attributes);

bool is_atm_morphism(const Atm& from, const Atm& to, const Morphism& f, const SortedMap& data_map);

struct AtmRule {
  std::string name;
  Atm interface;
  Atm left;
  Atm right;
  Morphism l;  // interface -> left
  Morphism r;  // interface -> right
};

struct AtmPartialRule {
  std::string name;
  Atm left;
  Atm right;
  PartialMorphism morphism;  // left -> right
};

enum class RewriteMode { Dpo, Spo };

// Rewrites only when every rule morphism and the match stabilize the
// attributes (NotStabilizing otherwise); the result is re-validated.
Atm atm_rewrite_gate(const AtmRule& rule, const Morphism& match, const Atm& host, RewriteMode mode);
Atm atm_rewrite_gate(const AtmPartialRule& rule, const Morphism& match, const Atm& host);

}  // namespace monograph
