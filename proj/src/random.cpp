#include "monograph/random.hpp"

#include "monograph/limits.hpp"

namespace monograph {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Monograph random_monograph(Rng& rng, const RandomSpec& spec) {
  std::vector<std::size_t> lengths;
  if (spec.lengths) {
    lengths.assign(spec.lengths->begin(), spec.lengths->end());
  } else {
    for (std::size_t i = 0; i <= spec.max_length; ++i) lengths.push_back(i);
  }
  if (lengths.empty()) return Monograph();
  std::size_t n = uniform(rng, spec.min_edges, spec.max_edges);
  bool has_zero = lengths.front() == 0;
  if (spec.standard && !has_zero) return Monograph();
  std::vector<EdgeId> names;
  std::vector<std::size_t> lens;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(spec.prefix + std::to_string(i));
    std::size_t len = lengths[uniform(rng, 0, lengths.size() - 1)];
    if (i == 0 && has_zero && (spec.standard || uniform(rng, 0, 1) == 0)) len = 0;
    lens.push_back(len);
  }
  std::vector<EdgeId> targets;
  for (std::size_t i = 0; i < n; ++i)
    if (!spec.standard || lens[i] == 0) targets.push_back(names[i]);
  Adjacency adj;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = targets.empty() ? 0 : lens[i];
    EdgeSeq seq;
    for (std::size_t k = 0; k < len; ++k) seq.push_back(targets[uniform(rng, 0, targets.size() - 1)]);
    adj.emplace(names[i], std::move(seq));
  }
  return Monograph::validate(std::move(adj));
}

Submonograph random_submonograph(Rng& rng, const Monograph& m) {
  EdgeSet keep;
  for (const auto& kv : m.adjacency())
    if (uniform(rng, 0, 2) != 0) keep.insert(kv.first);
  return Submonograph::close_down(m, keep);
}

Monograph random_extension(Rng& rng, const Monograph& base, std::size_t extra,
                           std::size_t max_length, const std::string& prefix) {
  Adjacency adj = base.adjacency();
  std::vector<EdgeId> pool;
  for (const auto& kv : base.adjacency()) pool.push_back(kv.first);
  std::vector<EdgeId> fresh;
  for (std::size_t i = 0; i < extra; ++i) {
    std::string name = prefix + std::to_string(i);
    while (adj.count(name) != 0) name += "'";
    fresh.push_back(name);
    pool.push_back(name);
    adj.emplace(name, EdgeSeq{});
  }
  for (const auto& name : fresh) {
    std::size_t len = uniform(rng, 0, max_length);
    EdgeSeq seq;
    for (std::size_t k = 0; k < len; ++k) seq.push_back(pool[uniform(rng, 0, pool.size() - 1)]);
    adj[name] = std::move(seq);
  }
  return Monograph::validate(std::move(adj));
}

Morphism random_morphism_into(Rng& rng, const Monograph& cod) {
  Coproduct doubled = coproduct(cod, cod);
  Submonograph part = random_submonograph(rng, doubled.object);
  EdgeMap codiagonal;
  for (const auto& [x, y] : doubled.left.map()) codiagonal.emplace(y, x);
  for (const auto& [x, y] : doubled.right.map()) codiagonal.emplace(y, x);
  Morphism fold = Morphism::check(doubled.object, cod, std::move(codiagonal));
  return restrict(fold, part);
}

std::optional<Morphism> random_morphism(Rng& rng, const Monograph& dom, const Monograph& cod) {
  std::vector<Morphism> all = enumerate_morphisms(dom, cod);
  if (all.empty()) return std::nullopt;
  return all[uniform(rng, 0, all.size() - 1)];
}

}  // namespace monograph
