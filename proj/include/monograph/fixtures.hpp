#pragma once

#include "monograph/attributed.hpp"

// Small named objects used by the tests, the CLI goldens and the docs.
namespace monograph::fixtures {

// x -> x y x, y -> y x y.
Monograph running_example();
// Exchanges x and y.
Morphism running_example_swap();

// Graph type: nodes -> (), edges -> nodes nodes.
Monograph graph_type();
// Sorts nodes, edges; src and tgt from edges to nodes, src declared first.
Signature graph_signature();
// Five sorts and six monadic operators of attributed E-graphs.
Signature egraph_signature();

// "0" -> (), "k+1" -> "k" "k" for k < top.
Monograph globular_type(std::size_t top);
// V -> (), H_n_m -> V^(n+m) for n + m <= max_arity.
Monograph hypergraph_type(std::size_t max_arity);

// s, s' nodes; f -> s' s' s; c -> s'.
Monograph term_graph_type();
// x, x' nodes; e -> x' x' x; e' -> x', typed by name.
Morphism term_graph_example();

// "0" -> (), "1" -> 0 0, "2" -> 1 1.
Monograph three_levels();
// n <- n -> n, deleting l -> n n from L = {n, l}.
SpanRule loop_deletion_rule();
// n -> 0, l -> 1 into three_levels().
Morphism loop_deletion_match();

// e -> s, s -> e.
Monograph attribute_type();
// One sort s, no operators, carrier {a, b}.
Algebra attribute_data();
// a and b both refer to x, and x refers to x_target (a or b).
Atm attribute_shared(const std::string& x_target);
// a refers to y, b to z; y and z refer to the given attributes.
Atm attribute_split(const std::string& y_target, const std::string& z_target);

}  // namespace monograph::fixtures
