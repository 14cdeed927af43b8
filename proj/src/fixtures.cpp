#include "monograph/fixtures.hpp"

namespace monograph::fixtures {

Monograph running_example() {
  return Monograph::validate({{"x", {"x", "y", "x"}}, {"y", {"y", "x", "y"}}}, "A");
}

Morphism running_example_swap() {
  Monograph a = running_example();
  return Morphism::check(a, a, {{"x", "y"}, {"y", "x"}});
}

Monograph graph_type() {
  return Monograph::validate({{"nodes", {}}, {"edges", {"nodes", "nodes"}}}, "Tg");
}

Signature graph_signature() {
  return Signature::make({"nodes", "edges"},
                         {{"src", {"edges"}, "nodes"}, {"tgt", {"edges"}, "nodes"}});
}

Signature egraph_signature() {
  return Signature::make({"edges", "nv-edges", "ev-edges", "nodes", "values"},
                         {{"src_e", {"edges"}, "nodes"},
                          {"tgt_e", {"edges"}, "nodes"},
                          {"src_nv", {"nv-edges"}, "nodes"},
                          {"tgt_nv", {"nv-edges"}, "values"},
                          {"src_ev", {"ev-edges"}, "edges"},
                          {"tgt_ev", {"ev-edges"}, "values"}});
}

Monograph globular_type(std::size_t top) {
  Adjacency adj{{"0", {}}};
  for (std::size_t k = 1; k <= top; ++k)
    adj.emplace(std::to_string(k), EdgeSeq(2, std::to_string(k - 1)));
  return Monograph::validate(std::move(adj), "Tinf");
}

Monograph hypergraph_type(std::size_t max_arity) {
  Adjacency adj{{"V", {}}};
  for (std::size_t n = 0; n <= max_arity; ++n)
    for (std::size_t m = 0; n + m <= max_arity; ++m)
      adj.emplace("H_" + std::to_string(n) + "_" + std::to_string(m), EdgeSeq(n + m, "V"));
  return Monograph::validate(std::move(adj), "Th");
}

Monograph term_graph_type() {
  return Monograph::validate(
      {{"s", {}}, {"s'", {}}, {"f", {"s'", "s'", "s"}}, {"c", {"s'"}}}, "TSigma");
}

Morphism term_graph_example() {
  Monograph a = Monograph::validate(
      {{"x", {}}, {"x'", {}}, {"e", {"x'", "x'", "x"}}, {"e'", {"x'"}}}, "A");
  return Morphism::check(a, term_graph_type(), {{"x", "s"}, {"x'", "s'"}, {"e", "f"}, {"e'", "c"}});
}

Monograph three_levels() {
  return Monograph::validate({{"0", {}}, {"1", {"0", "0"}}, {"2", {"1", "1"}}}, "T3");
}

SpanRule loop_deletion_rule() {
  Monograph l = Monograph::validate({{"n", {}}, {"l", {"n", "n"}}}, "L");
  Monograph k = Monograph::validate({{"n", {}}}, "K");
  return SpanRule::make("loop", Morphism::check(k, l, {{"n", "n"}}), Morphism::identity(k));
}

Morphism loop_deletion_match() {
  return Morphism::check(loop_deletion_rule().lhs(), three_levels(), {{"n", "0"}, {"l", "1"}});
}

Monograph attribute_type() { return Monograph::validate({{"e", {"s"}}, {"s", {"e"}}}, "T"); }

Algebra attribute_data() {
  return Algebra::make(Signature::make({"s"}, {}), {{"s", {"a", "b"}}}, {});
}

Atm attribute_shared(const std::string& x_target) {
  Monograph g = Monograph::validate({{"a", {"x"}}, {"b", {"x"}}, {"x", {x_target}}});
  return Atm::validate(Morphism::check(g, attribute_type(), {{"a", "s"}, {"b", "s"}, {"x", "e"}}),
                       attribute_data());
}

Atm attribute_split(const std::string& y_target, const std::string& z_target) {
  Monograph g =
      Monograph::validate({{"a", {"y"}}, {"b", {"z"}}, {"y", {y_target}}, {"z", {z_target}}});
  return Atm::validate(
      Morphism::check(g, attribute_type(), {{"a", "s"}, {"b", "s"}, {"y", "e"}, {"z", "e"}}),
      attribute_data());
}

}  // namespace monograph::fixtures
