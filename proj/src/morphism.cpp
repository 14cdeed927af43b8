#include "monograph/morphism.hpp"

#include <algorithm>
#include <tuple>

namespace monograph {

struct MorphismAccess {
  static Morphism make(Monograph dom, Monograph cod, EdgeMap map) {
    return Morphism(std::move(dom), std::move(cod), std::move(map));
  }
};

Morphism Morphism::check(Monograph dom, Monograph cod, EdgeMap map) {
  for (const auto& [x, y] : map)
    if (!dom.contains(x))
      throw Error(ErrorKind::UnknownSource, "'" + x + "' is not an edge of the domain");
  for (const auto& [x, seq] : dom.adjacency()) {
    auto it = map.find(x);
    if (it == map.end()) throw Error(ErrorKind::Untotal, "no image for '" + x + "'");
    if (!cod.contains(it->second))
      throw Error(ErrorKind::UnknownTarget,
                  "image of '" + x + "' is '" + it->second + "', not an edge of the codomain");
  }
  for (const auto& [x, seq] : dom.adjacency()) {
    const EdgeSeq& target = cod.at(map.at(x));
    if (target.size() != seq.size())
      throw Error(ErrorKind::LengthMismatch, "'" + x + "' has length " + std::to_string(seq.size()) +
                                                 " but its image has length " +
                                                 std::to_string(target.size()));
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (map.at(seq[i]) != target[i])
        throw Error(ErrorKind::AdjacencyMismatch,
                    "'" + x + "' position " + std::to_string(i) + ": image of '" + seq[i] +
                        "' is '" + map.at(seq[i]) + "' but the image edge has '" + target[i] + "'");
  }
  return Morphism(std::move(dom), std::move(cod), std::move(map));
}

Morphism Morphism::identity(const Monograph& m) {
  EdgeMap map;
  for (const auto& kv : m.adjacency()) map.emplace_hint(map.end(), kv.first, kv.first);
  return Morphism(m, m, std::move(map));
}

Morphism Morphism::inclusion(const Submonograph& sub) {
  EdgeMap map;
  for (const auto& e : sub.edges()) map.emplace_hint(map.end(), e, e);
  return Morphism(sub.induced(), sub.parent(), std::move(map));
}

const EdgeId& Morphism::operator()(const EdgeId& e) const {
  auto it = map_.find(e);
  if (it == map_.end()) throw Error(ErrorKind::PreconditionViolated, "'" + e + "' not in domain");
  return it->second;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod() == g.dom()))
    throw Error(ErrorKind::CompositionMismatch, "codomain of the first is not the domain of the second");
  EdgeMap map;
  for (const auto& [x, y] : f.map()) map.emplace_hint(map.end(), x, g(y));
  return MorphismAccess::make(f.dom(), g.cod(), std::move(map));
}

Submonograph image(const Morphism& f, const Submonograph& sub) {
  if (!(sub.parent() == f.dom()))
    throw Error(ErrorKind::ParentMismatch, "submonograph is not inside the domain");
  EdgeSet out;
  for (const auto& e : sub.edges()) out.insert(f(e));
  return Submonograph::of(f.cod(), std::move(out));
}

Submonograph image(const Morphism& f) { return image(f, Submonograph::whole(f.dom())); }

Submonograph preimage(const Morphism& f, const Submonograph& sub) {
  if (!(sub.parent() == f.cod()))
    throw Error(ErrorKind::ParentMismatch, "submonograph is not inside the codomain");
  EdgeSet out;
  for (const auto& [x, y] : f.map())
    if (sub.contains(y)) out.insert(out.end(), x);
  return Submonograph::of(f.dom(), std::move(out));
}

Morphism restrict(const Morphism& f, const Submonograph& a, const Submonograph& c) {
  if (!(a.parent() == f.dom()) || !(c.parent() == f.cod()))
    throw Error(ErrorKind::ParentMismatch, "restriction outside the morphism's ends");
  EdgeMap map;
  for (const auto& e : a.edges()) {
    const EdgeId& y = f(e);
    if (!c.contains(y))
      throw Error(ErrorKind::ImageEscapes, "image of '" + e + "' is '" + y + "', outside the target");
    map.emplace_hint(map.end(), e, y);
  }
  return MorphismAccess::make(a.induced(), c.induced(), std::move(map));
}

Morphism restrict(const Morphism& f, const Submonograph& a) {
  return restrict(f, a, Submonograph::whole(f.cod()));
}

MorphismKind classify_morphism(const Morphism& f) {
  MorphismKind k;
  EdgeSet values;
  for (const auto& kv : f.map()) values.insert(kv.second);
  k.injective = values.size() == f.map().size();
  k.surjective = values.size() == f.cod().size();
  if (k.injective && k.surjective) {
    EdgeMap inv;
    for (const auto& [x, y] : f.map()) inv.emplace(y, x);
    try {
      Morphism::check(f.cod(), f.dom(), std::move(inv));
      k.iso = true;
    } catch (const Error&) {
      k.iso = false;
    }
  }
  return k;
}

Morphism inverse(const Morphism& f) {
  MorphismKind k = classify_morphism(f);
  if (!k.iso) throw Error(ErrorKind::NotBijective, "morphism is not bijective");
  EdgeMap inv;
  for (const auto& [x, y] : f.map()) inv.emplace(y, x);
  return MorphismAccess::make(f.cod(), f.dom(), std::move(inv));
}

bool is_slice_morphism(const Morphism& f, const Morphism& typing_dom, const Morphism& typing_cod) {
  if (!(f.dom() == typing_dom.dom()) || !(f.cod() == typing_cod.dom()) ||
      !(typing_dom.cod() == typing_cod.cod()))
    return false;
  for (const auto& [x, y] : f.map())
    if (typing_cod(y) != typing_dom(x)) return false;
  return true;
}

namespace {

// Backtracking with forced propagation along adjacency: assigning x to y
// forces x_i to y_i for every position i.
class Matcher {
 public:
  Matcher(const Monograph& dom, const Monograph& cod, const EnumerateOptions& options)
      : dom_(dom), cod_(cod), options_(options) {
    for (const auto& kv : dom.adjacency()) dom_names_.push_back(kv.first);
    for (const auto& kv : cod.adjacency()) cod_names_.push_back(kv.first);
    auto index_of = [](const std::vector<EdgeId>& names, const EdgeId& e) {
      return static_cast<int>(std::lower_bound(names.begin(), names.end(), e) - names.begin());
    };
    for (const auto& kv : dom.adjacency()) {
      std::vector<int> seq;
      for (const auto& x : kv.second) seq.push_back(index_of(dom_names_, x));
      dom_adj_.push_back(std::move(seq));
    }
    for (const auto& kv : cod.adjacency()) {
      std::vector<int> seq;
      for (const auto& x : kv.second) seq.push_back(index_of(cod_names_, x));
      cod_adj_.push_back(std::move(seq));
    }
    allowed_.assign(dom_names_.size(), {});
    for (std::size_t i = 0; i < dom_names_.size(); ++i) {
      auto it = options.allowed.find(dom_names_[i]);
      std::vector<char> ok(cod_names_.size(), 0);
      for (std::size_t j = 0; j < cod_names_.size(); ++j) {
        bool permitted = it == options.allowed.end() || it->second.count(cod_names_[j]) != 0;
        ok[j] = permitted && cod_adj_[j].size() == dom_adj_[i].size();
      }
      allowed_[i] = std::move(ok);
    }
    assign_.assign(dom_names_.size(), -1);
    used_.assign(cod_names_.size(), 0);
  }

  void run(const std::function<bool(const Morphism&)>& visit) {
    visit_ = &visit;
    search();
  }

 private:
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> work{{x, y}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      if (assign_[a] == b) continue;
      if (assign_[a] != -1) return false;
      if (!allowed_[a][b]) return false;
      if (options_.injective && used_[b]) return false;
      assign_[a] = b;
      used_[b] = 1;
      trail.push_back(a);
      const auto& sa = dom_adj_[a];
      const auto& sb = cod_adj_[b];
      for (std::size_t i = 0; i < sa.size(); ++i) work.emplace_back(sa[i], sb[i]);
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int a : trail) {
      used_[assign_[a]] = 0;
      assign_[a] = -1;
    }
    trail.clear();
  }

  // Returns false once the search must stop.
  bool search() {
    int next = -1;
    for (std::size_t i = 0; i < assign_.size(); ++i)
      if (assign_[i] == -1) {
        next = static_cast<int>(i);
        break;
      }
    if (next == -1) return emit();
    for (std::size_t j = 0; j < cod_names_.size(); ++j) {
      if (!allowed_[next][j]) continue;
      // used_ only tracks injectivity; a shared image may still be legal.
      if (options_.injective && used_[j]) continue;
      std::vector<int> trail;
      bool ok = assign(next, static_cast<int>(j), trail);
      bool keep_going = true;
      if (ok) keep_going = search();
      undo(trail);
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit() {
    EdgeMap map;
    for (std::size_t i = 0; i < assign_.size(); ++i)
      map.emplace_hint(map.end(), dom_names_[i], cod_names_[assign_[i]]);
    ++count_;
    bool more = (*visit_)(MorphismAccess::make(dom_, cod_, std::move(map)));
    if (options_.limit && count_ >= *options_.limit) return false;
    return more;
  }

  const Monograph& dom_;
  const Monograph& cod_;
  const EnumerateOptions& options_;
  std::vector<EdgeId> dom_names_, cod_names_;
  std::vector<std::vector<int>> dom_adj_, cod_adj_;
  std::vector<std::vector<char>> allowed_;
  std::vector<int> assign_;
  std::vector<char> used_;
  std::size_t count_ = 0;
  const std::function<bool(const Morphism&)>* visit_ = nullptr;
};

}  // namespace

void for_each_morphism(const Monograph& dom, const Monograph& cod, const EnumerateOptions& options,
                       const std::function<bool(const Morphism&)>& visit) {
  if (options.limit && *options.limit == 0) return;
  Matcher(dom, cod, options).run(visit);
}

std::vector<Morphism> enumerate_morphisms(const Monograph& dom, const Monograph& cod,
                                          const EnumerateOptions& options) {
  std::vector<Morphism> out;
  for_each_morphism(dom, cod, options, [&](const Morphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Morphism> enumerate_morphisms(const Monograph& dom, const Monograph& cod,
                                          std::optional<std::size_t> limit) {
  EnumerateOptions options;
  options.limit = limit;
  return enumerate_morphisms(dom, cod, options);
}

namespace {

// Invariant preserved by isomorphisms: own length, lengths of the sequence
// entries in order, and how often the edge occurs in other sequences.
using EdgeInvariant = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;

std::map<EdgeId, EdgeInvariant> invariants(const Monograph& m) {
  std::map<EdgeId, std::size_t> occurrences;
  for (const auto& kv : m.adjacency())
    for (const auto& x : kv.second) ++occurrences[x];
  std::map<EdgeId, EdgeInvariant> out;
  for (const auto& [e, seq] : m.adjacency()) {
    std::vector<std::size_t> lens;
    for (const auto& x : seq) lens.push_back(m.length(x));
    out.emplace(e, EdgeInvariant{seq.size(), std::move(lens), occurrences[e]});
  }
  return out;
}

}  // namespace

std::optional<Morphism> find_isomorphism(const Monograph& a, const Monograph& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ia = invariants(a);
  auto ib = invariants(b);
  std::multiset<EdgeInvariant> ma, mb;
  for (const auto& kv : ia) ma.insert(kv.second);
  for (const auto& kv : ib) mb.insert(kv.second);
  if (ma != mb) return std::nullopt;
  EnumerateOptions options;
  options.injective = true;
  options.limit = 1;
  for (const auto& [x, inv] : ia) {
    EdgeSet ok;
    for (const auto& [y, invy] : ib)
      if (invy == inv) ok.insert(y);
    options.allowed.emplace(x, std::move(ok));
  }
  std::optional<Morphism> found;
  for_each_morphism(a, b, options, [&](const Morphism& f) {
    found = f;
    return false;
  });
  return found;
}

bool isomorphic(const Monograph& a, const Monograph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace monograph
