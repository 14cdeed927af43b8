#pragma once

#include <random>

#include "monograph/morphism.hpp"

namespace monograph {

using Rng = std::mt19937_64;

struct RandomSpec {
  std::size_t min_edges = 0;
  std::size_t max_edges = 4;
  std::size_t max_length = 3;
  // When set, lengths are drawn from this set instead of 0..max_length.
  std::optional<Trace> lengths;
  // Every sequence entry is a node.
  bool standard = false;
  std::string prefix = "e";
};

// Edges are named prefix0, prefix1, ... Non-node edges need some edge to
// point at, so the first edge is always a node when lengths allow it.
Monograph random_monograph(Rng& rng, const RandomSpec& spec);

Submonograph random_submonograph(Rng& rng, const Monograph& m);

// Adds `extra` new edges (named prefix0...) whose entries are any edges.
Monograph random_extension(Rng& rng, const Monograph& base, std::size_t extra,
                           std::size_t max_length, const std::string& prefix = "n");

// Some closed part of the doubled codomain, mapped back by the codiagonal:
// neither injective nor surjective in general.
Morphism random_morphism_into(Rng& rng, const Monograph& cod);

// Uniform choice among all morphisms dom -> cod, if any.
std::optional<Morphism> random_morphism(Rng& rng, const Monograph& dom, const Monograph& cod);

}  // namespace monograph
