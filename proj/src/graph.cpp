#include "lamina/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lamina {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace

InteractionGraph build_interaction_graph(std::span<const ResonantSet> sets, std::span<const WaveVector> domain) {
  InteractionGraph g;
  g.nodes.assign(domain.begin(), domain.end());
  for (const auto& set : sets) {
    for (const auto& k : set.mode_span()) g.nodes.push_back(k);
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());

  auto node_index = [&](const WaveVector& k) {
    return static_cast<std::size_t>(std::lower_bound(g.nodes.begin(), g.nodes.end(), k) - g.nodes.begin());
  };

  std::map<std::pair<WaveVector, WaveVector>, std::vector<std::size_t>> edges;
  DisjointSets components(g.nodes.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    auto modes = sets[s].mode_span();
    for (std::size_t i = 0; i < modes.size(); ++i) {
      for (std::size_t j = i + 1; j < modes.size(); ++j) {
        if (modes[i] == modes[j]) continue;
        auto key = std::minmax(modes[i], modes[j]);
        auto& tag = edges[{key.first, key.second}];
        if (tag.empty() || tag.back() != s) tag.push_back(s);
        components.unite(node_index(modes[i]), node_index(modes[j]));
      }
    }
  }
  g.edges.reserve(edges.size());
  for (auto& [ends, tag] : edges) g.edges.push_back({ends.first, ends.second, std::move(tag)});

  std::map<std::size_t, std::vector<WaveVector>> by_root;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) by_root[components.find(i)].push_back(g.nodes[i]);
  for (auto& [root, members] : by_root) g.clusters.push_back(std::move(members));
  std::sort(g.clusters.begin(), g.clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return g;
}

InteractionGraph build_interaction_graph(const SearchResult& result) {
  auto domain = domain_modes(result.law, result.domain);
  return build_interaction_graph(result.solutions, domain);
}

}  // namespace lamina
