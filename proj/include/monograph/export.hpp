#pragma once

#include <optional>
#include <string>

#include "monograph/morphism.hpp"

namespace monograph {

// GraphViz digraph. Nodes are points; every other edge is a small box with
// one arc per position, labelled by the position. With a typing, labels
// read "name:type".
std::string export_dot(const Monograph& m, const std::optional<Morphism>& typing = std::nullopt);

// TikZ picture on a circular layout. Nodes are bullets, a length-1 edge is a
// thick dash with one arrow, and a longer edge is a polyline through its
// entries whose segment i carries i+1 tips. Needs the arrows.meta library.
// Throws TooManyTips when a segment would need more than 9 tips.
std::string export_tikz(const Monograph& m, const std::optional<Morphism>& typing = std::nullopt);

}  // namespace monograph
