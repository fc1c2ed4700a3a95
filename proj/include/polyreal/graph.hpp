#ifndef POLYREAL_GRAPH_HPP
#define POLYREAL_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "polyreal/rational.hpp"

namespace polyreal {

/// Raw edge list as it arrives from input; may contain loops and parallels.
struct MultigraphInput {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Simple undirected graph: no loops, no parallel edges.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized i < j

  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);

  bool has_edge(int u, int v) const {
    return edges.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
  }
  std::vector<std::vector<int>> adjacency() const;
  std::size_t edge_count() const { return edges.size(); }

  bool operator==(const Graph&) const = default;
};

}  // namespace polyreal

#endif  // POLYREAL_GRAPH_HPP
