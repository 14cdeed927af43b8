#include "generators.hpp"

#include "monograph/fixtures.hpp"
#include "monograph/limits.hpp"

namespace gen {

using namespace monograph;

namespace {

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng); }

Morphism random_out_of(Rng& rng, const Monograph& k, std::size_t max_extra, const std::string& prefix) {
  Monograph ext = random_extension(rng, k, below(rng, max_extra), 2, prefix);
  // Half the time keep the inclusion so injective rules stay common.
  if (below(rng, 1) == 0) {
    EdgeMap inc;
    for (const auto& e : k.edges()) inc.emplace(e, e);
    return Morphism::check(k, ext, inc);
  }
  return *random_morphism(rng, k, ext);
}

}  // namespace

SpanRule random_rule(Rng& rng, std::size_t max_interface, std::size_t max_extra) {
  Monograph k = random_monograph(rng, {.max_edges = max_interface, .max_length = 2, .prefix = "k"});
  Morphism l = random_out_of(rng, k, max_extra, "l");
  Morphism r = random_out_of(rng, k, max_extra, "r");
  return SpanRule::make("rw", l, r);
}

Morphism random_match(Rng& rng, const SpanRule& rule, std::size_t max_extra) {
  Monograph host = random_extension(rng, rule.lhs(), below(rng, max_extra), 2, "h");
  return *random_morphism(rng, rule.lhs(), host);
}

std::pair<SpanRule, Morphism> random_applicable(Rng& rng) {
  for (;;) {
    SpanRule rule = random_rule(rng);
    Morphism m = random_match(rng, rule);
    if (gluing_condition(rule.left, m).holds) return {rule, m};
  }
}

Morphism scramble(const Monograph& m, const std::string& suffix) {
  // Map the i-th edge (in order) to a name sorting in reverse position.
  EdgeMap names;
  std::size_t n = m.size(), i = 0;
  for (const auto& e : m.edges()) {
    names.emplace(e, "z" + std::to_string(100 + n - i) + suffix);
    ++i;
  }
  return relabel(m, names);
}

std::vector<Atm> atm_universe(std::size_t max_e) {
  std::vector<Atm> out;
  for (std::size_t n = 1; n <= max_e; ++n) {
    // Entry of each e-edge, then the e-edges a and b refer to.
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits)
      for (std::size_t ta = 0; ta < n; ++ta)
        for (std::size_t tb = 0; tb < n; ++tb) {
          Adjacency adj{{"a", {"e" + std::to_string(ta)}}, {"b", {"e" + std::to_string(tb)}}};
          EdgeMap typing{{"a", "s"}, {"b", "s"}};
          for (std::size_t i = 0; i < n; ++i) {
            adj.emplace("e" + std::to_string(i), EdgeSeq{(bits >> i & 1) ? "b" : "a"});
            typing.emplace("e" + std::to_string(i), "e");
          }
          out.push_back(Atm::validate(
              Morphism::check(Monograph::validate(adj), monograph::fixtures::attribute_type(), typing),
              monograph::fixtures::attribute_data()));
        }
  }
  return out;
}

Atm sub_atm(const Atm& x, const EdgeSet& edges) {
  Submonograph sub = Submonograph::of(x.graph(), edges);
  return Atm::validate(compose(x.typing(), Morphism::inclusion(sub)), x.data());
}

AtmInstance random_stabilizing_rule(Rng& rng, const Atm& host) {
  const Monograph& g = host.graph();
  EdgeSet core{"a", "b", g.at("a")[0], g.at("b")[0]};
  EdgeSet l_edges = core, k_edges = core;
  for (const auto& e : g.edges()) {
    if (core.count(e) || below(rng, 1) == 0) continue;
    l_edges.insert(e);
    if (below(rng, 1) == 0) k_edges.insert(e);
  }
  Atm left = sub_atm(host, l_edges);
  Atm interface = sub_atm(left, k_edges);

  Adjacency r_adj = interface.graph().adjacency();
  EdgeMap r_typing = interface.typing().map();
  std::size_t added = below(rng, 2);
  for (std::size_t i = 0; i < added; ++i) {
    r_adj.emplace("new" + std::to_string(i), EdgeSeq{below(rng, 1) ? "b" : "a"});
    r_typing.emplace("new" + std::to_string(i), "e");
  }
  Atm right = Atm::validate(Morphism::check(Monograph::validate(r_adj), host.type(), r_typing), host.data());

  auto inclusion = [](const Atm& from, const Atm& to) {
    EdgeMap m;
    for (const auto& e : from.graph().edges()) m.emplace(e, e);
    return Morphism::check(from.graph(), to.graph(), m);
  };
  AtmRule rule{"rw", interface, left, right, inclusion(interface, left), inclusion(interface, right)};
  return {rule, inclusion(left, host)};
}

namespace {

std::string odd_name(Rng& rng, const std::string& base) {
  static const std::vector<std::string> suffixes{"", "", "", " x", "\"", "\\", "{", "#", "->", ";", ":", "'", "@"};
  return base + suffixes[below(rng, suffixes.size() - 1)];
}

}  // namespace

Document random_document(Rng& rng) {
  Document doc;
  std::vector<std::string> monographs;
  std::size_t count = below(rng, 3);
  for (std::size_t i = 0; i < count; ++i) {
    Monograph m = random_monograph(rng, {.max_edges = 4, .max_length = 3});
    EdgeMap names;
    std::size_t j = 0;
    for (const auto& e : m.edges()) names.emplace(e, odd_name(rng, "e" + std::to_string(j++)));
    std::string name = odd_name(rng, "M" + std::to_string(i));
    doc.add_monograph(name, relabel(m, names).cod());
    monographs.push_back(name);
  }

  std::vector<std::pair<std::string, std::string>> morphisms;  // (name, dom)
  for (std::size_t i = 0; !monographs.empty() && i < 4; ++i) {
    const std::string& a = monographs[below(rng, monographs.size() - 1)];
    const std::string& b = monographs[below(rng, monographs.size() - 1)];
    auto f = random_morphism(rng, doc.monograph(a), doc.monograph(b));
    if (!f) continue;
    std::string name = odd_name(rng, "f" + std::to_string(i));
    doc.add_morphism(name, a, b, f->map());
    morphisms.emplace_back(name, a);
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    for (std::size_t j = i; j < morphisms.size(); ++j)
      if (morphisms[i].second == morphisms[j].second && below(rng, 1) == 0) {
        doc.add_rule("r" + std::to_string(i) + "_" + std::to_string(j), morphisms[i].first, morphisms[j].first);
      }

  if (below(rng, 1) == 0) {
    std::vector<Sort> sorts;
    for (std::size_t i = 0, n = 1 + below(rng, 2); i < n; ++i) sorts.push_back(odd_name(rng, "s" + std::to_string(i)));
    std::vector<Operator> ops;
    for (std::size_t i = 0, n = below(rng, 3); i < n; ++i) {
      Operator o{odd_name(rng, "op" + std::to_string(i)), {}, sorts[below(rng, sorts.size() - 1)]};
      for (std::size_t k = 0, arity = below(rng, 2); k < arity; ++k) o.domain.push_back(sorts[below(rng, sorts.size() - 1)]);
      ops.push_back(std::move(o));
    }
    Signature sig = Signature::make(sorts, ops);
    doc.add_signature("Sig", sig);

    std::map<Sort, std::set<Element>> carriers;
    for (const auto& s : sorts)
      for (std::size_t i = 0, n = 1 + below(rng, 1); i < n; ++i) carriers[s].insert(odd_name(rng, "v" + std::to_string(i)));
    std::map<std::string, OpTable> tables;
    for (const auto& o : ops) {
      std::vector<std::vector<Element>> args{{}};
      for (const auto& d : o.domain) {
        std::vector<std::vector<Element>> next;
        for (const auto& prefix : args)
          for (const auto& x : carriers[d]) {
            next.push_back(prefix);
            next.back().push_back(x);
          }
        args = std::move(next);
      }
      std::vector<Element> range(carriers[o.range].begin(), carriers[o.range].end());
      auto& t = tables[o.name];
      for (const auto& a : args) t.emplace(a, range[below(rng, range.size() - 1)]);
    }
    doc.add_algebra(odd_name(rng, "Alg"), "Sig", Algebra::make(sig, carriers, tables));
  }
  return doc;
}

}  // namespace gen
