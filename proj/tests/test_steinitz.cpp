#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>
#include <random>

#include "corpus.hpp"
#include "polyreal/hull.hpp"
#include "polyreal/lattice.hpp"
#include "polyreal/steinitz.hpp"

using namespace polyreal;

namespace {

// --- brute-force oracles (independent of the library implementations) ---

bool connected_after_removal(const Graph& g, const std::vector<bool>& removed) {
  int start = -1, remaining = 0;
  for (int v = 0; v < g.n; ++v)
    if (!removed[v]) {
      if (start < 0) start = v;
      ++remaining;
    }
  if (remaining <= 1) return true;
  std::vector<bool> seen(g.n, false);
  std::queue<int> q;
  q.push(start);
  seen[start] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u = 0; u < g.n; ++u) {
      if (seen[u] || removed[u] || !g.has_edge(v, u)) continue;
      seen[u] = true;
      q.push(u);
      ++count;
    }
  }
  return count == remaining;
}

// Oracle for 3-connectivity: no removal of <= 2 vertices disconnects.
bool threeconnected_oracle(const Graph& g) {
  if (g.n < 4) return false;
  std::vector<bool> removed(g.n, false);
  if (!connected_after_removal(g, removed)) return false;
  for (int a = 0; a < g.n; ++a) {
    removed.assign(g.n, false);
    removed[a] = true;
    if (!connected_after_removal(g, removed)) return false;
    for (int b = a + 1; b < g.n; ++b) {
      removed.assign(g.n, false);
      removed[a] = removed[b] = true;
      if (!connected_after_removal(g, removed)) return false;
    }
  }
  return true;
}

bool subset_connected(const Graph& g, unsigned mask) {
  if (mask == 0) return false;
  const int start = __builtin_ctz(mask);
  unsigned seen = 1u << start;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u = 0; u < g.n; ++u) {
      const unsigned bit = 1u << u;
      if (!(mask & bit) || (seen & bit) || !g.has_edge(v, u)) continue;
      seen |= bit;
      q.push(u);
    }
  }
  return seen == mask;
}

bool subsets_adjacent(const Graph& g, unsigned a, unsigned b) {
  for (int u = 0; u < g.n; ++u) {
    if (!(a & (1u << u))) continue;
    for (int v = 0; v < g.n; ++v)
      if ((b & (1u << v)) && g.has_edge(u, v)) return true;
  }
  return false;
}

bool find_branch_sets(const Graph& g, const std::vector<unsigned>& connected_subsets,
                      std::vector<unsigned>& chosen, unsigned used, std::size_t need,
                      const std::vector<std::pair<int, int>>& adjacency_req) {
  if (chosen.size() == need) {
    for (auto [i, j] : adjacency_req)
      if (!subsets_adjacent(g, chosen[i], chosen[j])) return false;
    return true;
  }
  for (unsigned s : connected_subsets) {
    if (s & used) continue;
    chosen.push_back(s);
    if (find_branch_sets(g, connected_subsets, chosen, used | s, need, adjacency_req))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Oracle for planarity on <= 10 vertices via Wagner's theorem: planar iff
// neither a K5 minor nor a K3,3 minor exists.
bool planarity_oracle(const Graph& g) {
  std::vector<unsigned> connected_subsets;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask)
    if (subset_connected(g, mask)) connected_subsets.push_back(mask);

  std::vector<std::pair<int, int>> k5_req;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5_req.emplace_back(i, j);
  std::vector<unsigned> chosen;
  if (find_branch_sets(g, connected_subsets, chosen, 0, 5, k5_req)) return false;

  std::vector<std::pair<int, int>> k33_req;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33_req.emplace_back(i, j);
  chosen.clear();
  if (find_branch_sets(g, connected_subsets, chosen, 0, 6, k33_req)) return false;
  return true;
}

MultigraphInput as_multigraph(const Graph& g) {
  return MultigraphInput{g.n, {g.edges.begin(), g.edges.end()}};
}

// Deterministic random 3-polytopal graphs: edge graphs of exact hulls of
// random rational point configurations.
std::vector<Graph> random_3polytopal_graphs(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<QVector> pts;
    const int n = 5 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i)
      pts.push_back({make_rational(num(rng), 3), make_rational(num(rng), 3),
                     make_rational(num(rng), 3)});
    try {
      PointConfiguration config = PointConfiguration::make(3, pts);
      if (affine_dim(config) != 3) continue;
      const HullResult hull = convex_hull(config);
      if (hull.vertex_indices.size() < 5 || hull.vertex_indices.size() > 10) continue;
      out.push_back(edge_graph(face_lattice(hull, config)));
    } catch (const error&) {
      continue;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("is_simple detects loops and parallel edges") {
  CHECK(is_simple(as_multigraph(corpus::complete_graph(4))));
  CHECK_FALSE(is_simple(MultigraphInput{3, {{0, 1}, {1, 0}}}));
  CHECK_FALSE(is_simple(MultigraphInput{3, {{0, 1}, {2, 2}}}));
}

TEST_CASE("planarity of the classics") {
  CHECK(is_planar(corpus::complete_graph(4)));
  CHECK_FALSE(is_planar(corpus::complete_graph(5)));
  CHECK_FALSE(is_planar(corpus::complete_bipartite(3, 3)));
  CHECK(is_planar(corpus::cube_graph()));
  CHECK(is_planar(corpus::dodecahedron_graph()));
}

TEST_CASE("planar embedding witness satisfies the Euler formula") {
  for (const Graph& g : {corpus::complete_graph(4), corpus::cube_graph(),
                         corpus::octahedron_graph(), corpus::prism_graph(3),
                         corpus::dodecahedron_graph()}) {
    const auto emb = planar_embedding(g);
    REQUIRE(emb.has_value());
    CHECK(static_cast<long>(g.n) - static_cast<long>(g.edge_count()) +
              static_cast<long>(emb->faces.size()) ==
          2);
  }
  CHECK_FALSE(planar_embedding(corpus::complete_graph(5)).has_value());
}

TEST_CASE("3-connectivity cases") {
  CHECK(is_3connected(corpus::complete_graph(4)));
  CHECK_FALSE(is_3connected(corpus::path_graph(5)));
  CHECK(is_3connected(corpus::cube_graph()));
  CHECK_THROWS_AS(is_3connected(corpus::complete_graph(3)), error);
}

TEST_CASE("is_planar and is_3connected agree with brute-force oracles on the corpus") {
  std::vector<Graph> graphs = {corpus::complete_graph(4),     corpus::complete_graph(5),
                               corpus::complete_bipartite(3, 3), corpus::cube_graph(),
                               corpus::octahedron_graph(),    corpus::prism_graph(3),
                               corpus::prism_graph(4),        corpus::path_graph(5),
                               corpus::wheel_graph(4),        corpus::wheel_graph(5)};
  for (const Graph& g : random_3polytopal_graphs(4, 1234)) graphs.push_back(g);
  for (const Graph& g : graphs) {
    REQUIRE(g.n <= 10);
    CHECK(is_planar(g) == planarity_oracle(g));
    if (g.n >= 4) CHECK(is_3connected(g) == threeconnected_oracle(g));
  }
}

TEST_CASE("is_3polytopal composes the three predicates") {
  CHECK(is_3polytopal(as_multigraph(corpus::complete_graph(4))));
  CHECK_FALSE(is_3polytopal(as_multigraph(corpus::complete_graph(5))));
  CHECK(is_3polytopal(as_multigraph(corpus::dodecahedron_graph())));
  CHECK_FALSE(is_3polytopal(MultigraphInput{4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}}}));
}

TEST_CASE("realize_3polytope on K4 gives an integer tetrahedron") {
  const PointConfiguration p = realize_3polytope(corpus::complete_graph(4));
  CHECK(p.dim == 3);
  CHECK(p.size() == 4);
  for (const QVector& pt : p.points)
    for (const Rational& c : pt) CHECK(rat_den(c) == 1);
  const FaceLattice l = face_lattice(convex_hull(p), p);
  CHECK(l.f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(is_realization(p, l));
}

TEST_CASE("realize_3polytope on the cube graph gives 6 quadrilateral facets") {
  const Graph g = corpus::cube_graph();
  const PointConfiguration p = realize_3polytope(g);
  CHECK(p.size() == 8);
  for (const QVector& pt : p.points)
    for (const Rational& c : pt) CHECK(rat_den(c) == 1);
  const HullResult hull = convex_hull(p);
  CHECK(hull.facets.size() == 6);
  for (const HullFacet& f : hull.facets) CHECK(f.vertices.size() == 4);
  CHECK(edge_graph(face_lattice(hull, p)) == g);
}

TEST_CASE("realize_3polytope on the triangular prism has f-vector (6,9,5)") {
  const Graph g = corpus::prism_graph(3);
  const PointConfiguration p = realize_3polytope(g);
  const FaceLattice l = face_lattice(convex_hull(p), p);
  CHECK(l.f_vector() == std::vector<std::size_t>{6, 9, 5});
  CHECK(edge_graph(l) == g);
}

TEST_CASE("realize_3polytope on the octahedron and wheel graphs") {
  for (const Graph& g : {corpus::octahedron_graph(), corpus::wheel_graph(4),
                         corpus::wheel_graph(5)}) {
    const PointConfiguration p = realize_3polytope(g);
    CHECK(edge_graph(face_lattice(convex_hull(p), p)) == g);
  }
}

TEST_CASE("realize_3polytope on the dodecahedron graph, exact verification") {
  const Graph g = corpus::dodecahedron_graph();
  const PointConfiguration p = realize_3polytope(g);
  CHECK(p.size() == 20);
  for (const QVector& pt : p.points)
    for (const Rational& c : pt) CHECK(rat_den(c) == 1);
  const FaceLattice l = face_lattice(convex_hull(p), p);
  CHECK(l.f_vector() == std::vector<std::size_t>{20, 30, 12});
  CHECK(edge_graph(l) == g);
}

TEST_CASE("realize_3polytope verifies random hull-derived graphs") {
  for (const Graph& g : random_3polytopal_graphs(3, 99)) {
    const PointConfiguration p = realize_3polytope(g);
    CHECK(edge_graph(face_lattice(convex_hull(p), p)) == g);
  }
}

TEST_CASE("realize_3polytope names the failing predicate") {
  CHECK_THROWS_WITH_AS(realize_3polytope(corpus::complete_graph(5)),
                       doctest::Contains("planar"), error);
  CHECK_THROWS_WITH_AS(realize_3polytope(corpus::path_graph(5)),
                       doctest::Contains("3-connected"), error);
}

TEST_CASE("realization_space_dim_3 is e - 6") {
  const PointConfiguration tetra = corpus::simplex_config(3);
  CHECK(realization_space_dim_3(face_lattice(convex_hull(tetra), tetra)) == 0);
  const PointConfiguration cube = corpus::cube_config();
  CHECK(realization_space_dim_3(face_lattice(convex_hull(cube), cube)) == 6);
  const PointConfiguration octa = corpus::cross_config();
  CHECK(realization_space_dim_3(face_lattice(convex_hull(octa), octa)) == 6);
  const PointConfiguration prism = corpus::triangular_prism_config();
  CHECK(realization_space_dim_3(face_lattice(convex_hull(prism), prism)) == 3);

  const PointConfiguration sq = corpus::square_config();
  CHECK_THROWS_AS(realization_space_dim_3(face_lattice(convex_hull(sq), sq)), error);
}
