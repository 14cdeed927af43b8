#pragma once

#include <string>
#include <vector>

#include "monograph/partial.hpp"

namespace monograph {

// Span L <-l- K -r-> R.
struct SpanRule {
  std::string name;
  Morphism left;
  Morphism right;

  // Throws PreconditionViolated unless left and right share their domain.
  static SpanRule make(std::string name, Morphism left, Morphism right);
  const Monograph& interface() const { return left.dom(); }
  const Monograph& lhs() const { return left.cod(); }
  const Monograph& rhs() const { return right.cod(); }
};

// Partial morphism L -> R.
struct PartialRule {
  std::string name;
  PartialMorphism morphism;

  const Monograph& lhs() const { return morphism.dom(); }
  const Monograph& rhs() const { return morphism.cod(); }
};

enum class GluingClause {
  Identification = 1,  // a deleted edge is identified with another one
  Dangling = 2,        // a kept edge of the host refers to a deleted one
};

struct GluingViolation {
  GluingClause clause;
  // Identification: (deleted edge of L, other edge of L with the same image).
  // Dangling: (deleted edge of M, edge of M referring to it).
  EdgeId first;
  EdgeId second;
};

struct GluingReport {
  bool holds = true;
  EdgeSet deleted;  // m applied to the edges of L outside l's image
  std::vector<GluingViolation> violations;
};

GluingReport gluing_condition(const Morphism& l, const Morphism& m);
std::string describe(const GluingReport& report);

struct PushoutComplement {
  Monograph object;  // D, a submonograph of M
  Morphism k;        // K -> D
  Morphism f;        // D -> M, the inclusion
};
// Throws GluingViolated.
PushoutComplement pushout_complement(const Morphism& l, const Morphism& m);

// Edges of N coming from the host keep their (least) host name; edges created
// by the right-hand side are named "<rule>.<edge>.<n>" with n the least number
// giving a fresh name.
struct DpoResult {
  PushoutComplement complement;
  Monograph result;
  Morphism comatch;  // R -> N
  Morphism context;  // D -> N
};
// Throws GluingViolated.
DpoResult dpo_apply(const SpanRule& rule, const Morphism& match);

PartialRule span_to_partial(const SpanRule& rule);

struct SpoResult {
  PartialPushout raw;
  Monograph result;
  PartialMorphism comatch;  // R -> N
  PartialMorphism host;     // M -> N
};
SpoResult spo_apply(const PartialRule& rule, const Morphism& match);

}  // namespace monograph
