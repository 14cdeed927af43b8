#include "monograph/limits.hpp"

#include <algorithm>
#include <numeric>

namespace monograph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller index stays the root, so roots are least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

EdgeMap identity_names(const Monograph& m) {
  EdgeMap out;
  for (const auto& kv : m.adjacency()) out.emplace_hint(out.end(), kv.first, kv.first);
  return out;
}

}  // namespace

std::string pair_name(const EdgeId& x, const EdgeId& y) { return "(" + x + "," + y + ")"; }

Coproduct coproduct(const Monograph& a, const Monograph& b) {
  Adjacency adj;
  EdgeMap left, right;
  auto add = [&](const Monograph& m, const std::string& tag, EdgeMap& inj) {
    for (const auto& [e, seq] : m.adjacency()) {
      EdgeSeq tagged;
      for (const auto& x : seq) tagged.push_back(x + tag);
      adj.emplace(e + tag, std::move(tagged));
      inj.emplace(e, e + tag);
    }
  };
  add(a, ".0", left);
  add(b, ".1", right);
  Monograph sum = Monograph::validate(std::move(adj));
  if (sum.size() != a.size() + b.size())
    throw Error(ErrorKind::PreconditionViolated, "tagged names collide");
  return Coproduct{sum, Morphism::check(a, sum, std::move(left)),
                   Morphism::check(b, sum, std::move(right))};
}

Coequalizer coequalizer(const Morphism& f, const Morphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw Error(ErrorKind::NotParallel, "coequalizer needs a parallel pair");
  const Monograph& b = f.cod();
  std::vector<EdgeId> names;
  for (const auto& kv : b.adjacency()) names.push_back(kv.first);
  auto index = [&](const EdgeId& e) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), e) - names.begin());
  };
  DisjointSets classes(names.size());
  for (const auto& [a, fa] : f.map()) classes.unite(index(fa), index(g(a)));
  EdgeMap quotient;
  Adjacency adj;
  for (std::size_t i = 0; i < names.size(); ++i)
    quotient.emplace_hint(quotient.end(), names[i], names[classes.find(i)]);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (classes.find(i) != i) continue;
    EdgeSeq seq;
    for (const auto& x : b.at(names[i])) seq.push_back(quotient.at(x));
    adj.emplace(names[i], std::move(seq));
  }
  Monograph q = Monograph::validate(std::move(adj));
  return Coequalizer{q, Morphism::check(b, q, std::move(quotient))};
}

Pushout pushout(const Morphism& f, const Morphism& g) {
  if (!(f.dom() == g.dom()))
    throw Error(ErrorKind::PreconditionViolated, "pushout needs a common domain");
  Coproduct sum = coproduct(f.cod(), g.cod());
  Coequalizer q = coequalizer(compose(sum.left, f), compose(sum.right, g));
  return Pushout{q.object, compose(q.quotient, sum.left), compose(q.quotient, sum.right)};
}

Product product(const Monograph& a, const Monograph& b) {
  // Greatest fixpoint: drop pairs whose positional pairs are missing.
  std::set<std::pair<EdgeId, EdgeId>> pairs;
  for (const auto& [x, sx] : a.adjacency())
    for (const auto& [y, sy] : b.adjacency())
      if (sx.size() == sy.size()) pairs.emplace(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto& sx = a.at(it->first);
      const auto& sy = b.at(it->second);
      bool ok = true;
      for (std::size_t i = 0; i < sx.size() && ok; ++i) ok = pairs.count({sx[i], sy[i]}) != 0;
      if (ok) {
        ++it;
      } else {
        it = pairs.erase(it);
        changed = true;
      }
    }
  }
  Adjacency adj;
  EdgeMap left, right;
  for (const auto& [x, y] : pairs) {
    EdgeSeq seq;
    const auto& sx = a.at(x);
    const auto& sy = b.at(y);
    for (std::size_t i = 0; i < sx.size(); ++i) seq.push_back(pair_name(sx[i], sy[i]));
    EdgeId name = pair_name(x, y);
    adj.emplace(name, std::move(seq));
    left.emplace(name, x);
    right.emplace(name, y);
  }
  Monograph p = Monograph::validate(std::move(adj));
  return Product{p, Morphism::check(p, a, std::move(left)), Morphism::check(p, b, std::move(right))};
}

Equalizer equalizer(const Morphism& f, const Morphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw Error(ErrorKind::NotParallel, "equalizer needs a parallel pair");
  EdgeSet keep;
  for (const auto& [x, fx] : f.map())
    if (g(x) == fx) keep.insert(keep.end(), x);
  Submonograph sub = Submonograph::of(f.dom(), std::move(keep));
  return Equalizer{sub.induced(), Morphism::inclusion(sub)};
}

Pullback pullback(const Morphism& f, const Morphism& g) {
  if (!(f.cod() == g.cod()))
    throw Error(ErrorKind::PreconditionViolated, "pullback needs a common codomain");
  Adjacency adj;
  EdgeMap left, right;
  for (const auto& [x, fx] : f.map())
    for (const auto& [y, gy] : g.map()) {
      if (fx != gy) continue;
      EdgeSeq seq;
      const auto& sx = f.dom().at(x);
      const auto& sy = g.dom().at(y);
      for (std::size_t i = 0; i < sx.size(); ++i) seq.push_back(pair_name(sx[i], sy[i]));
      EdgeId name = pair_name(x, y);
      adj.emplace(name, std::move(seq));
      left.emplace(name, x);
      right.emplace(name, y);
    }
  Monograph p = Monograph::validate(std::move(adj));
  return Pullback{p, Morphism::check(p, f.dom(), std::move(left)),
                  Morphism::check(p, g.dom(), std::move(right))};
}

Monograph initial() { return Monograph(); }

Monograph terminal(const Trace& allowed) {
  Adjacency adj;
  if (allowed.count(0) != 0)
    for (std::size_t len : allowed) adj.emplace(std::to_string(len), EdgeSeq(len, "0"));
  return Monograph::validate(std::move(adj));
}

Morphism bang(const Monograph& m, const Trace& allowed) {
  if (!m.is_standard()) throw Error(ErrorKind::NotStandard, "monograph is not standard");
  for (std::size_t len : m.trace())
    if (allowed.count(len) == 0)
      throw Error(ErrorKind::TraceEscapesO, "length " + std::to_string(len) + " is not allowed");
  EdgeMap map;
  for (const auto& [e, seq] : m.adjacency()) map.emplace_hint(map.end(), e, std::to_string(seq.size()));
  return Morphism::check(m, terminal(allowed), std::move(map));
}

Morphism relabel(const Monograph& m, const EdgeMap& names) {
  EdgeMap full = identity_names(m);
  EdgeSet used;
  for (auto& [e, n] : full) {
    auto it = names.find(e);
    if (it == names.end()) throw Error(ErrorKind::Untotal, "no new name for '" + e + "'");
    n = it->second;
    if (!used.insert(n).second)
      throw Error(ErrorKind::PreconditionViolated, "new name '" + n + "' used twice");
  }
  Adjacency adj;
  for (const auto& [e, seq] : m.adjacency()) {
    EdgeSeq renamed;
    for (const auto& x : seq) renamed.push_back(full.at(x));
    adj.emplace(full.at(e), std::move(renamed));
  }
  Monograph copy = Monograph::validate(std::move(adj), m.name());
  return Morphism::check(m, copy, std::move(full));
}

}  // namespace monograph
