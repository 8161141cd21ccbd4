#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lamina/search.hpp"

namespace lamina {

struct GraphEdge {
  WaveVector a;  // a < b
  WaveVector b;
  std::vector<std::size_t> sets;  // indices of the sets containing both ends

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Nodes are the domain modes (plus any set mode outside the domain); an
// edge joins two modes iff they occur together in some resonant set;
// clusters are the connected components, each sorted, ordered by their
// smallest node. Non-resonant modes are singleton clusters.
struct InteractionGraph {
  std::vector<WaveVector> nodes;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<WaveVector>> clusters;
};

InteractionGraph build_interaction_graph(std::span<const ResonantSet> sets, std::span<const WaveVector> domain);
InteractionGraph build_interaction_graph(const SearchResult& result);

}  // namespace lamina
