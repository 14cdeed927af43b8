#include <algorithm>
#include <functional>

#include "doctest.h"
#include "monograph/fixtures.hpp"
#include "monograph/random.hpp"
#include "oracles.hpp"

using namespace monograph;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::PreconditionViolated;
}

std::vector<EdgeMap> maps_of(const std::vector<Morphism>& ms) {
  std::vector<EdgeMap> out;
  for (const auto& m : ms) out.push_back(m.map());
  return out;
}

Monograph relabel_for_test(const Monograph& m, const EdgeMap& rename) {
  Adjacency adj;
  for (const auto& [x, seq] : m.adjacency()) {
    EdgeSeq out;
    for (const auto& y : seq) out.push_back(rename.at(y));
    adj.emplace(rename.at(x), out);
  }
  return Monograph::validate(adj);
}

}  // namespace

TEST_CASE("swap is an automorphism of the running example") {
  Morphism swap = fixtures::running_example_swap();
  Monograph a = fixtures::running_example();
  CHECK(classify_morphism(swap).iso);
  CHECK(compose(swap, swap) == Morphism::identity(a));
  CHECK(inverse(swap) == swap);
}

TEST_CASE("check reports the first failing equation") {
  Monograph a = fixtures::running_example();
  CHECK(kind_of([&] { Morphism::check(a, a, {{"x", "x"}, {"y", "x"}}); }) == ErrorKind::AdjacencyMismatch);
  CHECK_FALSE(oracle::is_morphism_map(a, a, {{"x", "x"}, {"y", "x"}}));
  CHECK(kind_of([&] { Morphism::check(a, a, {{"x", "x"}}); }) == ErrorKind::Untotal);
  CHECK(kind_of([&] { Morphism::check(a, a, {{"x", "x"}, {"y", "q"}}); }) == ErrorKind::UnknownTarget);
  CHECK(kind_of([&] { Morphism::check(a, a, {{"x", "x"}, {"y", "y"}, {"z", "x"}}); }) ==
        ErrorKind::UnknownSource);
  Monograph n = Monograph::validate({{"n", {}}});
  CHECK(kind_of([&] { Morphism::check(n, a, {{"n", "x"}}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("composition with identities and mismatch") {
  Morphism swap = fixtures::running_example_swap();
  Monograph a = swap.dom();
  CHECK(compose(Morphism::identity(a), swap) == swap);
  CHECK(compose(swap, Morphism::identity(a)) == swap);
  Morphism other = Morphism::identity(Monograph::validate({{"n", {}}}));
  CHECK(kind_of([&] { compose(other, swap); }) == ErrorKind::CompositionMismatch);
}

TEST_CASE("inclusion is injective, not surjective") {
  Monograph m = Monograph::validate({{"n", {}}, {"e", {"n", "n"}}});
  Morphism inc = Morphism::inclusion(Submonograph::of(m, {"n"}));
  MorphismKind k = classify_morphism(inc);
  CHECK(k.injective);
  CHECK_FALSE(k.surjective);
  CHECK_FALSE(k.iso);
  CHECK(kind_of([&] { inverse(inc); }) == ErrorKind::NotBijective);
}

TEST_CASE("image, preimage and restriction") {
  Morphism swap = fixtures::running_example_swap();
  Monograph a = swap.dom();
  CHECK(image(swap).edges() == a.edges());
  CHECK(preimage(swap, Submonograph::none(a)).edges().empty());

  Monograph g = Monograph::validate({{"n1", {}}, {"n2", {}}, {"e", {"n1", "n2"}}});
  Monograph loop = Monograph::validate({{"n", {}}, {"l", {"n", "n"}}});
  Morphism f = Morphism::check(g, loop, {{"n1", "n"}, {"n2", "n"}, {"e", "l"}});
  auto nodes = Submonograph::of(g, {"n1", "n2"});
  auto n = Submonograph::of(loop, {"n"});
  Morphism r = restrict(f, nodes, n);
  CHECK(r.dom().edges() == EdgeSet{"n1", "n2"});
  CHECK(r.cod().edges() == EdgeSet{"n"});
  CHECK(kind_of([&] { restrict(f, Submonograph::whole(g), n); }) == ErrorKind::ImageEscapes);
  CHECK(preimage(f, n).edges() == EdgeSet{"n1", "n2"});
}

TEST_CASE("enumeration examples") {
  Monograph a = fixtures::running_example();
  auto autos = enumerate_morphisms(a, a);
  REQUIRE(autos.size() == 2);
  CHECK(autos[0] == Morphism::identity(a));
  CHECK(autos[1] == fixtures::running_example_swap());
  CHECK(maps_of(autos) == oracle::all_morphism_maps(a, a));

  Monograph node = Monograph::validate({{"p", {}}});
  Monograph three = Monograph::validate({{"a", {}}, {"b", {}}, {"c", {}}, {"e", {"a", "b"}}});
  CHECK(enumerate_morphisms(node, three).size() == 3);
  CHECK(enumerate_morphisms(node, three, std::size_t{2}).size() == 2);
}

TEST_CASE("enumeration options: injective and allowed") {
  Monograph two = Monograph::validate({{"p", {}}, {"q", {}}});
  Monograph three = Monograph::validate({{"a", {}}, {"b", {}}, {"c", {}}});
  EnumerateOptions inj;
  inj.injective = true;
  CHECK(enumerate_morphisms(two, three, inj).size() == 6);
  EnumerateOptions pinned;
  pinned.allowed["p"] = {"b"};
  auto ms = enumerate_morphisms(two, three, pinned);
  CHECK(ms.size() == 3);
  for (const auto& m : ms) CHECK(m("p") == "b");
}

TEST_CASE("property: enumeration equals brute force on small instances") {
  Rng rng(17);
  for (int round = 0; round < 150; ++round) {
    Monograph a = random_monograph(rng, {.min_edges = 0, .max_edges = 4, .max_length = 2});
    Monograph b = random_monograph(rng, {.min_edges = 0, .max_edges = 4, .max_length = 2, .prefix = "f"});
    CHECK(maps_of(enumerate_morphisms(a, b)) == oracle::all_morphism_maps(a, b));
  }
}

TEST_CASE("property: category laws, node and trace preservation, standardness reflection") {
  Rng rng(23);
  int checked = 0;
  for (int round = 0; round < 80; ++round) {
    Monograph c = random_monograph(rng, {.min_edges = 1, .max_edges = 4, .max_length = 2, .prefix = "g"});
    auto g = std::optional<Morphism>(random_morphism_into(rng, c));
    auto f = std::optional<Morphism>(random_morphism_into(rng, g->dom()));
    Monograph a = f->dom(), b = f->cod();
    ++checked;
    auto h = random_morphism(rng, c, c);
    REQUIRE(h);
    CHECK(compose(*h, compose(*g, *f)) == compose(compose(*h, *g), *f));
    CHECK(compose(Morphism::identity(b), *f) == *f);
    Morphism gf = compose(*g, *f);
    CHECK(oracle::is_morphism_map(a, c, gf.map()));

    EdgeSet pre_nodes;
    for (const auto& [x, y] : f->map())
      if (b.nodes().count(y)) pre_nodes.insert(x);
    CHECK(pre_nodes == a.nodes());
    Trace ta = a.trace(), tb = b.trace();
    CHECK(std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()));
    if (classify_morphism(*f).surjective) CHECK(ta == tb);
    if (b.is_standard()) CHECK(a.is_standard());
  }
  CHECK(checked == 80);
}

TEST_CASE("property: image and preimage laws") {
  Rng rng(29);
  for (int round = 0; round < 100; ++round) {
    Monograph m = random_monograph(rng, {.min_edges = 1, .max_edges = 4, .max_length = 2});
    Morphism f = random_morphism_into(rng, m);
    auto c = random_submonograph(rng, m);
    auto a = random_submonograph(rng, f.dom());
    // f(f^-1(C)) = C n f(M) and A inside f^-1(f(A)).
    CHECK(image(f, preimage(f, c)) == intersect(c, image(f)));
    CHECK(a.is_subset_of(preimage(f, image(f, a))));
    CHECK(oracle::is_closed_subset(m, image(f, a).edges()));
    CHECK(oracle::is_closed_subset(f.dom(), preimage(f, c).edges()));
  }
}

TEST_CASE("property: bijective morphisms have morphism inverses") {
  Rng rng(31);
  for (int round = 0; round < 80; ++round) {
    Monograph m = random_monograph(rng, {.min_edges = 1, .max_edges = 4, .max_length = 3});
    for (const auto& f : enumerate_morphisms(m, m)) {
      MorphismKind k = classify_morphism(f);
      bool bijective = k.injective && k.surjective;
      CHECK(k.iso == bijective);
      if (bijective) {
        Morphism g = inverse(f);
        CHECK(oracle::is_morphism_map(m, m, g.map()));
        CHECK(compose(g, f) == Morphism::identity(m));
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  Monograph a = fixtures::running_example();
  Monograph renamed = Monograph::validate({{"p", {"p", "q", "p"}}, {"q", {"q", "p", "q"}}});
  CHECK(find_isomorphism(a, renamed).has_value());
  Monograph other = Monograph::validate({{"x", {"x", "x", "x"}}, {"n", {}}, {"m", {}}});
  CHECK_FALSE(isomorphic(a, other));
}

TEST_CASE("property: isomorphism search agrees with brute force on 5-edge pairs") {
  Rng rng(37);
  int positives = 0;
  for (int round = 0; round < 200; ++round) {
    Monograph a = random_monograph(rng, {.min_edges = 5, .max_edges = 5, .max_length = 2});
    Monograph b;
    if (round % 2 == 0) {
      std::vector<EdgeId> names{"v0", "v1", "v2", "v3", "v4"};
      std::shuffle(names.begin(), names.end(), rng);
      EdgeMap rename;
      std::size_t i = 0;
      for (const auto& e : a.edges()) rename[e] = names[i++];
      b = relabel_for_test(a, rename);
    } else {
      b = random_monograph(rng, {.min_edges = 5, .max_edges = 5, .max_length = 2, .prefix = "v"});
    }
    bool expected = oracle::isomorphic(a, b);
    auto iso = find_isomorphism(a, b);
    CHECK(iso.has_value() == expected);
    if (iso) {
      ++positives;
      CHECK(classify_morphism(*iso).iso);
    }
  }
  CHECK(positives >= 100);
}
