#include "monograph/partial.hpp"

namespace monograph {

PartialMorphism PartialMorphism::make(Submonograph domain, Morphism total) {
  if (!(total.dom() == domain.induced()))
    throw Error(ErrorKind::PreconditionViolated,
                "total part must be defined exactly on the domain of definition");
  return PartialMorphism(std::move(domain), std::move(total));
}

PartialMorphism PartialMorphism::from_total(const Morphism& f) {
  return PartialMorphism(Submonograph::whole(f.dom()), f);
}

bool operator==(const PartialMorphism& a, const PartialMorphism& b) {
  return a.domain_ == b.domain_ && a.total_ == b.total_;
}

PartialMorphism compose_partial(const PartialMorphism& g, const PartialMorphism& f) {
  if (!(f.cod() == g.dom()))
    throw Error(ErrorKind::CompositionMismatch, "codomain of the first is not the domain of the second");
  EdgeSet keep;
  EdgeMap map;
  for (const auto& [x, y] : f.total().map())
    if (g.domain().contains(y)) {
      keep.insert(x);
      map.emplace(x, g.total()(y));
    }
  Submonograph domain = Submonograph::of(f.dom(), std::move(keep));
  return PartialMorphism::make(domain, Morphism::check(domain.induced(), g.cod(), std::move(map)));
}

namespace {

// Submonograph of the induced monograph of outer with the edges of inner.
Submonograph relative(const Submonograph& inner, const Submonograph& outer) {
  return Submonograph::of(outer.induced(), inner.edges());
}

void require_preimage(const Morphism& f, const Submonograph& target, const Submonograph& expected,
                      const char* which) {
  if (preimage(f, target).edges() != expected.edges())
    throw Error(ErrorKind::PreconditionViolated,
                std::string("preimage under ") + which + " does not equal the restricted domain");
}

}  // namespace

RestrictedCoequalizer coequalizer_restriction(const Morphism& f, const Morphism& g,
                                              const Submonograph& a_sub,
                                              const Submonograph& b_sub) {
  require_preimage(f, b_sub, a_sub, "the first morphism");
  require_preimage(g, b_sub, a_sub, "the second morphism");
  Coequalizer full = coequalizer(f, g);
  Submonograph q_sub = image(full.quotient, b_sub);
  Morphism c = restrict(full.quotient, b_sub, q_sub);
  return RestrictedCoequalizer{full, q_sub, Coequalizer{q_sub.induced(), c}};
}

RestrictedPushout pushout_restriction(const Morphism& f, const Morphism& g,
                                      const Submonograph& a_sub, const Submonograph& b_sub,
                                      const Submonograph& c_sub) {
  require_preimage(f, b_sub, a_sub, "the first morphism");
  require_preimage(g, c_sub, a_sub, "the second morphism");
  Pushout full = pushout(f, g);
  Submonograph q_sub = unite(image(full.left, b_sub), image(full.right, c_sub));
  return RestrictedPushout{full, q_sub,
                           Pushout{q_sub.induced(), restrict(full.left, b_sub, q_sub),
                                   restrict(full.right, c_sub, q_sub)}};
}

PartialPushout pushout_partial(const PartialMorphism& f, const PartialMorphism& g) {
  if (!(f.dom() == g.dom()))
    throw Error(ErrorKind::PreconditionViolated, "partial pushout needs a common domain");
  const Monograph& a = f.dom();
  const EdgeSet& a1 = f.domain().edges();
  const EdgeSet& a2 = g.domain().edges();

  // Shrink to the greatest J with f^-1 f(J) = J and g^-1 g(J) = J.
  EdgeSet j = intersect(f.domain(), g.domain()).edges();
  for (bool changed = true; changed;) {
    changed = false;
    std::set<EdgeId> f_out, g_out;
    for (const auto& x : a1)
      if (j.count(x) == 0) f_out.insert(f.total()(x));
    for (const auto& x : a2)
      if (j.count(x) == 0) g_out.insert(g.total()(x));
    EdgeSet keep;
    for (const auto& x : j)
      if (f_out.count(f.total()(x)) == 0 && g_out.count(g.total()(x)) == 0) keep.insert(x);
    EdgeSet closed = Submonograph::close_down(a, keep).edges();
    if (closed != j) {
      j = std::move(closed);
      changed = true;
    }
  }
  Submonograph kernel = Submonograph::of(a, j);

  auto surviving = [&](const PartialMorphism& h, const EdgeSet& defined) {
    EdgeSet lost;
    for (const auto& x : defined)
      if (j.count(x) == 0) lost.insert(h.total()(x));
    EdgeSet keep;
    for (const auto& kv : h.cod().adjacency())
      if (lost.count(kv.first) == 0) keep.insert(kv.first);
    return Submonograph::close_down(h.cod(), keep);
  };
  Submonograph x = surviving(f, a1);
  Submonograph y = surviving(g, a2);

  Morphism f_core = restrict(f.total(), relative(kernel, f.domain()), x);
  Morphism g_core = restrict(g.total(), relative(kernel, g.domain()), y);
  Pushout po = pushout(f_core, g_core);
  return PartialPushout{kernel,
                        x,
                        y,
                        po.object,
                        PartialMorphism::make(x, po.left),
                        PartialMorphism::make(y, po.right)};
}

}  // namespace monograph
