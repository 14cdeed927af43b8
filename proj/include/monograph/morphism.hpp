#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "monograph/monograph.hpp"

namespace monograph {

using EdgeMap = std::map<EdgeId, EdgeId>;

// Total map f with |f(x)| = |x| and f(x_i) = f(x)_i.
class Morphism {
 public:
  // Throws UnknownSource, Untotal, UnknownTarget, LengthMismatch or
  // AdjacencyMismatch, reporting the lexicographically first culprit.
  static Morphism check(Monograph dom, Monograph cod, EdgeMap map);
  static Morphism identity(const Monograph& m);
  // Inclusion of the induced monograph into its parent.
  static Morphism inclusion(const Submonograph& sub);

  const Monograph& dom() const { return dom_; }
  const Monograph& cod() const { return cod_; }
  const EdgeMap& map() const { return map_; }
  const EdgeId& operator()(const EdgeId& e) const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  Morphism(Monograph dom, Monograph cod, EdgeMap map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}
  friend struct MorphismAccess;
  Monograph dom_;
  Monograph cod_;
  EdgeMap map_;
};

// g after f. Throws CompositionMismatch unless f.cod() == g.dom().
Morphism compose(const Morphism& g, const Morphism& f);

Submonograph image(const Morphism& f, const Submonograph& sub);
Submonograph image(const Morphism& f);
Submonograph preimage(const Morphism& f, const Submonograph& sub);

// f restricted to a and corestricted to c; throws ImageEscapes if f[a] is not
// inside c.
Morphism restrict(const Morphism& f, const Submonograph& a, const Submonograph& c);
Morphism restrict(const Morphism& f, const Submonograph& a);

struct MorphismKind {
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};
MorphismKind classify_morphism(const Morphism& f);

// Throws NotBijective.
Morphism inverse(const Morphism& f);

bool is_slice_morphism(const Morphism& f, const Morphism& typing_dom, const Morphism& typing_cod);

struct EnumerateOptions {
  std::optional<std::size_t> limit;
  bool injective = false;
  // Per domain edge, the admissible images; edges absent here are unconstrained.
  std::map<EdgeId, EdgeSet> allowed;
};

// Visits morphisms in lexicographic order of (f(e1), f(e2), ...) over the
// sorted domain edges. The visitor returns false to stop.
void for_each_morphism(const Monograph& dom, const Monograph& cod, const EnumerateOptions& options,
                       const std::function<bool(const Morphism&)>& visit);

std::vector<Morphism> enumerate_morphisms(const Monograph& dom, const Monograph& cod,
                                          std::optional<std::size_t> limit = std::nullopt);
std::vector<Morphism> enumerate_morphisms(const Monograph& dom, const Monograph& cod,
                                          const EnumerateOptions& options);

std::optional<Morphism> find_isomorphism(const Monograph& a, const Monograph& b);
bool isomorphic(const Monograph& a, const Monograph& b);

}  // namespace monograph
