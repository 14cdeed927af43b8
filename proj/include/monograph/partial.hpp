#pragma once

#include "monograph/limits.hpp"

namespace monograph {

// A total morphism defined on a submonograph of the domain.
class PartialMorphism {
 public:
  // Throws PreconditionViolated unless total.dom() is the induced domain.
  static PartialMorphism make(Submonograph domain, Morphism total);
  static PartialMorphism from_total(const Morphism& f);

  const Monograph& dom() const { return domain_.parent(); }
  const Monograph& cod() const { return total_.cod(); }
  const Submonograph& domain() const { return domain_; }
  const Morphism& total() const { return total_; }
  bool is_total() const { return domain_.size() == dom().size(); }

  friend bool operator==(const PartialMorphism& a, const PartialMorphism& b);

 private:
  PartialMorphism(Submonograph domain, Morphism total)
      : domain_(std::move(domain)), total_(std::move(total)) {}
  Submonograph domain_;
  Morphism total_;
};

// g after f, defined on f^-1(domain of g).
PartialMorphism compose_partial(const PartialMorphism& g, const PartialMorphism& f);

// Restriction of the coequalizer c of (f, g) to b_sub. Requires
// f^-1(b_sub) = a_sub = g^-1(b_sub), otherwise PreconditionViolated.
struct RestrictedCoequalizer {
  Coequalizer full;
  Submonograph restricted_object;  // c(b_sub) inside full.object
  Coequalizer restricted;          // b_sub -> c(b_sub)
};
RestrictedCoequalizer coequalizer_restriction(const Morphism& f, const Morphism& g,
                                              const Submonograph& a_sub,
                                              const Submonograph& b_sub);

// Restriction of the pushout of (f, g) to b_sub and c_sub. Requires
// f^-1(b_sub) = a_sub = g^-1(c_sub).
struct RestrictedPushout {
  Pushout full;
  Submonograph restricted_object;  // left(b_sub) united with right(c_sub)
  Pushout restricted;
};
RestrictedPushout pushout_restriction(const Morphism& f, const Morphism& g,
                                      const Submonograph& a_sub, const Submonograph& b_sub,
                                      const Submonograph& c_sub);

// Pushout of B <-f- A -g-> C among partial morphisms.
struct PartialPushout {
  Submonograph kernel;         // greatest J in both domains with f^-1 f(J) = J = g^-1 g(J)
  Submonograph left_domain;    // greatest X in B with f^-1(X) inside the kernel
  Submonograph right_domain;   // greatest Y in C with g^-1(Y) inside the kernel
  Monograph object;
  PartialMorphism left;        // B -> Q, defined on left_domain
  PartialMorphism right;       // C -> Q, defined on right_domain
};
PartialPushout pushout_partial(const PartialMorphism& f, const PartialMorphism& g);

}  // namespace monograph
