#include "polyreal/graph.hpp"

namespace polyreal {

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw error("Graph: vertex index out of range");
    if (u == v) throw error("Graph: loop edge");
    g.edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  }
  return g;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace polyreal
