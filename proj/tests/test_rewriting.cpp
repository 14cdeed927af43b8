#include "doctest.h"
#include "generators.hpp"
#include "monograph/fixtures.hpp"
#include "oracles.hpp"

using namespace monograph;

namespace {

Monograph mono(Adjacency adj, std::string name = {}) { return Monograph::validate(std::move(adj), std::move(name)); }

// Is there any closed D inside M with some k: K -> D completing a pushout
// square over (l, m)? Searched exhaustively.
bool brute_force_complement_exists(const Morphism& l, const Morphism& m) {
  for (const auto& d_edges : oracle::closed_subsets(m.cod())) {
    Submonograph d = Submonograph::of(m.cod(), d_edges);
    Morphism inc = Morphism::inclusion(d);
    for (const auto& kmap : oracle::all_morphism_maps(l.dom(), d.induced())) {
      Morphism k = Morphism::check(l.dom(), d.induced(), kmap);
      if (oracle::is_set_pushout(l, k, m, inc)) return true;
    }
  }
  return false;
}

SpanRule identity_rule(const Monograph& l) {
  return SpanRule::make("id", Morphism::identity(l), Morphism::identity(l));
}

}  // namespace

TEST_CASE("gluing condition examples") {
  // Deleting an isolated node.
  Monograph n = mono({{"n", {}}});
  Morphism drop = Morphism::check(initial(), n, {});
  Monograph host = mono({{"a", {}}, {"b", {}}, {"e", {"b", "b"}}});
  CHECK(gluing_condition(drop, Morphism::check(n, host, {{"n", "a"}})).holds);
  CHECK_FALSE(gluing_condition(drop, Morphism::check(n, host, {{"n", "b"}})).holds);

  // Loop deletion at level 1 of the three-level monograph: 2 refers to 1.
  SpanRule loop = fixtures::loop_deletion_rule();
  GluingReport r = gluing_condition(loop.left, fixtures::loop_deletion_match());
  CHECK_FALSE(r.holds);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].clause == GluingClause::Dangling);
  CHECK(r.violations[0].first == "1");
  CHECK(r.violations[0].second == "2");
  CHECK(r.deleted == EdgeSet{"1"});
  CHECK(describe(r) == "edge '2' refers to deleted edge '1'");

  // Two deleted nodes sent to the same node.
  Monograph two = mono({{"p", {}}, {"q", {}}});
  Morphism drop2 = Morphism::check(initial(), two, {});
  GluingReport id = gluing_condition(drop2, Morphism::check(two, n, {{"p", "n"}, {"q", "n"}}));
  CHECK_FALSE(id.holds);
  CHECK(id.violations[0].clause == GluingClause::Identification);
}

TEST_CASE("pushout complement examples") {
  Monograph m = mono({{"n", {}}, {"l", {"n", "n"}}});
  SpanRule loop = fixtures::loop_deletion_rule();
  Morphism match = Morphism::check(loop.lhs(), m, {{"n", "n"}, {"l", "l"}});
  PushoutComplement pc = pushout_complement(loop.left, match);
  CHECK(pc.object == mono({{"n", {}}}));
  CHECK(oracle::is_set_pushout(loop.left, pc.k, match, pc.f));

  Morphism iso = fixtures::running_example_swap();
  PushoutComplement same = pushout_complement(Morphism::identity(iso.dom()), iso);
  CHECK(isomorphic(same.object, iso.cod()));

  CHECK_THROWS_AS(pushout_complement(loop.left, fixtures::loop_deletion_match()), Error);
  CHECK_FALSE(brute_force_complement_exists(loop.left, fixtures::loop_deletion_match()));
}

TEST_CASE("property: complement exists iff the gluing condition holds") {
  Rng rng(61);
  int holds = 0, fails = 0;
  for (int round = 0; round < 150; ++round) {
    SpanRule rule = gen::random_rule(rng, 2, 1);
    Morphism m = gen::random_match(rng, rule, 2);
    GluingReport report = gluing_condition(rule.left, m);
    if (report.holds) {
      ++holds;
      PushoutComplement pc = pushout_complement(rule.left, m);
      CHECK(oracle::is_set_pushout(rule.left, pc.k, m, pc.f));
      EdgeSet expected = m.cod().edges();
      for (const auto& e : report.deleted) expected.erase(e);
      CHECK(pc.object.edges() == expected);
    } else {
      ++fails;
      CHECK_THROWS_AS(pushout_complement(rule.left, m), Error);
      CHECK_FALSE(brute_force_complement_exists(rule.left, m));
    }
  }
  CHECK(holds >= 20);
  CHECK(fails >= 10);
}

TEST_CASE("DPO examples") {
  // Identity rule.
  Monograph a = fixtures::running_example();
  DpoResult same = dpo_apply(identity_rule(a), Morphism::identity(a));
  CHECK(same.result == a);

  // Edge flip: e -> u v becomes e -> v u.
  Monograph k = mono({{"u", {}}, {"v", {}}});
  Monograph l = mono({{"u", {}}, {"v", {}}, {"e", {"u", "v"}}});
  Monograph r = l;
  SpanRule flip = SpanRule::make("flip", Morphism::check(k, l, {{"u", "u"}, {"v", "v"}}),
                                 Morphism::check(k, r, {{"u", "v"}, {"v", "u"}}));
  Monograph host = mono({{"p", {}}, {"q", {}}, {"d", {"p", "q"}}});
  DpoResult flipped = dpo_apply(flip, Morphism::check(l, host, {{"u", "p"}, {"v", "q"}, {"e", "d"}}));
  CHECK(flipped.result == mono({{"p", {}}, {"q", {}}, {"flip.e.0", {"q", "p"}}}));

  // Adding a loop at a node.
  Monograph node = mono({{"n", {}}});
  Monograph looped = mono({{"n", {}}, {"l", {"n", "n"}}});
  SpanRule add = SpanRule::make("add", Morphism::identity(node), Morphism::check(node, looped, {{"n", "n"}}));
  DpoResult grown = dpo_apply(add, Morphism::check(node, host, {{"n", "q"}}));
  CHECK(grown.result == mono({{"p", {}}, {"q", {}}, {"d", {"p", "q"}}, {"add.l.0", {"q", "q"}}}));
}

TEST_CASE("fresh names avoid host names") {
  Monograph node = mono({{"n", {}}});
  Monograph looped = mono({{"n", {}}, {"l", {"n", "n"}}});
  SpanRule add = SpanRule::make("add", Morphism::identity(node), Morphism::check(node, looped, {{"n", "n"}}));
  Monograph host = mono({{"q", {}}, {"add.l.0", {"q", "q"}}});
  DpoResult grown = dpo_apply(add, Morphism::check(node, host, {{"n", "q"}}));
  CHECK(grown.result.contains("add.l.1"));
  CHECK(grown.result.size() == 3);
}

TEST_CASE("span to partial rule") {
  SpanRule loop = fixtures::loop_deletion_rule();
  PartialRule p = span_to_partial(loop);
  CHECK(p.lhs() == loop.lhs());
  CHECK(p.morphism.domain().edges() == EdgeSet{"n"});
  CHECK(p.rhs() == loop.rhs());
  CHECK(p.morphism.total().map() == EdgeMap{{"n", "n"}});

  // l collapses two interface nodes: R' identifies their images in R.
  Monograph k = mono({{"a", {}}, {"b", {}}});
  Monograph l = mono({{"c", {}}});
  Monograph r = mono({{"a", {}}, {"b", {}}, {"e", {"a", "b"}}});
  SpanRule merge = SpanRule::make("merge", Morphism::check(k, l, {{"a", "c"}, {"b", "c"}}),
                                  Morphism::check(k, r, {{"a", "a"}, {"b", "b"}}));
  PartialRule q = span_to_partial(merge);
  CHECK(q.rhs() == mono({{"a", {}}, {"e", {"a", "a"}}}));
  CHECK(q.morphism.total().map() == EdgeMap{{"c", "a"}});

  // Matchings of the span and of its partial rule are the same morphisms.
  Monograph host = mono({{"x", {}}, {"y", {}}});
  CHECK(enumerate_morphisms(merge.lhs(), host).size() == enumerate_morphisms(q.lhs(), host).size());
}

TEST_CASE("SPO examples") {
  SpanRule loop = fixtures::loop_deletion_rule();
  SpoResult cascade = spo_apply(span_to_partial(loop), fixtures::loop_deletion_match());
  CHECK(cascade.result == mono({{"0", {}}}));
  CHECK(cascade.host.domain().edges() == EdgeSet{"0"});

  // Empty left-hand side adds a disjoint copy of R.
  Monograph r = mono({{"n", {}}, {"l", {"n", "n"}}});
  SpanRule add = SpanRule::make("new", Morphism::identity(initial()), Morphism::check(initial(), r, {}));
  Monograph host = fixtures::running_example();
  SpoResult grown = spo_apply(span_to_partial(add), Morphism::check(initial(), host, {}));
  CHECK(isomorphic(grown.result, coproduct(host, r).object));
  CHECK(grown.result.contains("new.l.0"));
}

TEST_CASE("property: DPO is deterministic up to isomorphism and agrees with SPO") {
  Rng rng(67);
  for (int round = 0; round < 60; ++round) {
    auto [rule, m] = gen::random_applicable(rng);
    DpoResult d = dpo_apply(rule, m);
    SpoResult s = spo_apply(span_to_partial(rule), m);
    CHECK(isomorphic(d.result, s.result));

    Morphism rename = gen::scramble(m.cod(), "'");
    DpoResult d2 = dpo_apply(rule, compose(rename, m));
    CHECK(isomorphic(d.result, d2.result));

    // Every host edge outside the deleted part survives; deleted edges do not.
    GluingReport report = gluing_condition(rule.left, m);
    for (const auto& e : m.cod().edges()) {
      bool kept = s.host.domain().contains(e);
      CHECK(kept == (report.deleted.count(e) == 0));
      CHECK(d.complement.object.contains(e) == kept);
    }
  }
}

TEST_CASE("property: SPO deletes every matched deleted edge even without gluing") {
  Rng rng(71);
  for (int round = 0; round < 60; ++round) {
    SpanRule rule = gen::random_rule(rng);
    Morphism m = gen::random_match(rng, rule);
    PartialRule p = span_to_partial(rule);
    SpoResult s = spo_apply(p, m);
    for (const auto& [x, y] : m.map())
      if (!p.morphism.domain().contains(x)) CHECK_FALSE(s.host.domain().contains(y));
  }
}
