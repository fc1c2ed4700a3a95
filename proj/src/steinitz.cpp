#include "polyreal/steinitz.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace polyreal {

bool is_simple(const MultigraphInput& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    auto e = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!seen.insert(e).second) return false;
  }
  return true;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.n);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  int index = 0;
  auto edge_index = boost::get(boost::edge_index, bg);
  for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(edge_index, *ei, index++);
  return bg;
}

struct FaceCollector : boost::planar_face_traversal_visitor {
  std::vector<std::vector<int>>* faces;
  std::vector<int> current;
  void begin_face() { current.clear(); }
  template <typename Vertex>
  void next_vertex(Vertex v) {
    current.push_back(static_cast<int>(v));
  }
  void end_face() { faces->push_back(current); }
};

bool graph_connected(const Graph& g) {
  if (g.n == 0) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    ++count;
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        q.push(u);
      }
  }
  return count == g.n;
}

// Canonical form of a cyclic vertex sequence: lexicographically smallest
// among all rotations in both directions.
std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> seq = cycle;
    if (dir == 1) std::reverse(seq.begin(), seq.end());
    for (std::size_t s = 0; s < seq.size(); ++s) {
      std::vector<int> rot(seq.begin() + s, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

int select_outer_face(const std::vector<std::vector<int>>& faces) {
  int best = 0;
  std::vector<int> best_key = canonical_cycle(faces[0]);
  for (std::size_t i = 1; i < faces.size(); ++i) {
    std::vector<int> key = canonical_cycle(faces[i]);
    if (faces[i].size() < faces[best].size() ||
        (faces[i].size() == faces[best].size() && key < best_key)) {
      best = static_cast<int>(i);
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.n == 0) return true;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
  if (g.n == 0 || !graph_connected(g)) return std::nullopt;
  BoostGraph bg = to_boost(g);

  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding_storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(embedding_storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding))
    return std::nullopt;

  PlanarEmbedding result;
  result.graph = g;
  FaceCollector visitor;
  visitor.faces = &result.faces;
  boost::planar_face_traversal(bg, embedding, visitor, boost::get(boost::edge_index, bg));

  // Witness invariants: Euler formula and each edge in exactly two cycles.
  if (static_cast<long>(g.n) - static_cast<long>(g.edge_count()) +
          static_cast<long>(result.faces.size()) !=
      2)
    throw error("planar_embedding: Euler formula violated");
  std::map<std::pair<int, int>, int> edge_uses;
  for (const auto& face : result.faces)
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int u = face[i];
      const int v = face[(i + 1) % face.size()];
      edge_uses[{u, v}] += 1;
    }
  for (auto [u, v] : g.edges)
    if (edge_uses[{u, v}] != 1 || edge_uses[{v, u}] != 1)
      throw error("planar_embedding: edge not traversed once per direction");

  result.outer_face = select_outer_face(result.faces);
  return result;
}

namespace {

// Max vertex-disjoint paths between s and t via unit-capacity flow on the
// vertex-split digraph; stops as soon as `cap` paths are found.
int disjoint_paths_up_to(const Graph& g, int s, int t, int cap) {
  const int n = g.n;
  // Node 2v = v_in, 2v+1 = v_out. Arc capacities in a dense matrix.
  std::vector<std::vector<int>> capacity(2 * n, std::vector<int>(2 * n, 0));
  for (int v = 0; v < n; ++v) capacity[2 * v][2 * v + 1] = (v == s || v == t) ? cap : 1;
  for (auto [u, v] : g.edges) {
    capacity[2 * u + 1][2 * v] = 1;
    capacity[2 * v + 1][2 * u] = 1;
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> parent(2 * n, -1);
    std::queue<int> q;
    q.push(source);
    parent[source] = source;
    while (!q.empty() && parent[sink] == -1) {
      const int x = q.front();
      q.pop();
      for (int y = 0; y < 2 * n; ++y)
        if (parent[y] == -1 && capacity[x][y] > 0) {
          parent[y] = x;
          q.push(y);
        }
    }
    if (parent[sink] == -1) break;
    for (int y = sink; y != source; y = parent[y]) {
      capacity[parent[y]][y] -= 1;
      capacity[y][parent[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_3connected(const Graph& g) {
  if (g.n < 4) throw error("is_3connected: graph has fewer than 4 vertices");
  if (!graph_connected(g)) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (disjoint_paths_up_to(g, u, v, 3) < 3) return false;
    }
  return true;
}

SteinitzReport steinitz_report(const MultigraphInput& g) {
  SteinitzReport report;
  report.simple = is_simple(g);
  if (!report.simple) return report;
  const Graph simple = Graph::make(g.n, g.edges);
  report.planar = is_planar(simple);
  report.threeconnected = g.n >= 4 && is_3connected(simple);
  return report;
}

std::string SteinitzReport::failing_predicate() const {
  if (!simple) return "simple";
  if (!planar) return "planar";
  if (!threeconnected) return "3-connected";
  return "";
}

bool is_3polytopal(const MultigraphInput& g) { return steinitz_report(g).polytopal(); }

FaceLattice lattice_from_embedding(const PlanarEmbedding& emb) {
  FaceLattice l;
  l.n_vertices = emb.graph.n;
  l.faces.push_back(Face{-1, {}});
  std::vector<int> all(emb.graph.n);
  for (int i = 0; i < emb.graph.n; ++i) all[i] = i;
  l.faces.push_back(Face{3, all});
  for (int i = 0; i < emb.graph.n; ++i) l.faces.push_back(Face{0, {i}});
  for (auto [u, v] : emb.graph.edges) l.faces.push_back(Face{1, {u, v}});
  for (const auto& cycle : emb.faces) {
    Face f;
    f.rank = 2;
    f.vertices = cycle;
    std::sort(f.vertices.begin(), f.vertices.end());
    l.faces.push_back(std::move(f));
  }
  l.canonicalize();
  return l;
}

int realization_space_dim_3(const FaceLattice& l) {
  if (l.dim() != 3) throw error("realization_space_dim_3: lattice is not 3-dimensional");
  return static_cast<int>(l.faces_of_rank(1).size()) - 6;
}

namespace {

// Rational point on the unit circle with tangent-half-angle parameter t.
QVector circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational denom = 1 + t2;
  return {(1 - t2) / denom, 2 * t / denom};
}

// Exact Tutte embedding: outer cycle on a convex rational polygon, interior
// vertices at the average of their neighbors.
std::vector<QVector> tutte_embedding(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  const std::vector<int>& outer = emb.faces[emb.outer_face];
  std::vector<bool> is_outer(g.n, false);
  std::vector<QVector> pos(g.n, QVector{Rational(0), Rational(0)});
  for (std::size_t i = 0; i < outer.size(); ++i) {
    is_outer[outer[i]] = true;
    pos[outer[i]] = circle_point(Rational(static_cast<long>(i)));
  }

  std::vector<int> interior;
  std::vector<int> slot(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (!is_outer[v]) {
      slot[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  if (interior.empty()) return pos;

  const auto adj = g.adjacency();
  MatrixQ a(interior.size(), interior.size());
  std::vector<QVector> rhs(2, QVector(interior.size(), Rational(0)));
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const int v = interior[i];
    a.at(i, i) = Rational(static_cast<long>(adj[v].size()));
    for (int u : adj[v]) {
      if (is_outer[u]) {
        rhs[0][i] += pos[u][0];
        rhs[1][i] += pos[u][1];
      } else {
        a.at(i, slot[u]) -= 1;
      }
    }
  }
  for (int c = 0; c < 2; ++c) {
    LinearSolution sol = solve_linear(a, rhs[c]);
    if (sol.kind != LinearSolution::Kind::unique)
      throw error("tutte_embedding: singular system");
    for (std::size_t i = 0; i < interior.size(); ++i) pos[interior[i]][c] = sol.particular[i];
  }
  return pos;
}

Rational signed_area(const std::vector<int>& cycle, const std::vector<QVector>& pos) {
  Rational area(0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const QVector& p = pos[cycle[i]];
    const QVector& q = pos[cycle[(i + 1) % cycle.size()]];
    area += p[0] * q[1] - q[0] * p[1];
  }
  return area;
}

// Maxwell-Cremona lift with unit stress on interior edges. Requires a
// triangular outer face; returns per-vertex heights.
std::vector<Rational> maxwell_lift(const PlanarEmbedding& emb, const std::vector<QVector>& pos) {
  const std::vector<std::vector<int>>& faces = emb.faces;
  const int outer = emb.outer_face;

  // ccw-oriented bounded face cycles, and the face left of each directed edge
  std::map<std::pair<int, int>, int> left_face;
  std::vector<std::vector<int>> oriented(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (static_cast<int>(f) == outer) continue;
    oriented[f] = faces[f];
    if (signed_area(oriented[f], pos) < 0) std::reverse(oriented[f].begin(), oriented[f].end());
    for (std::size_t i = 0; i < oriented[f].size(); ++i) {
      const int u = oriented[f][i];
      const int v = oriented[f][(i + 1) % oriented[f].size()];
      left_face[{u, v}] = static_cast<int>(f);
    }
  }

  // Propagate affine functions (a, b, c) over the dual of the bounded faces.
  std::vector<std::optional<std::array<Rational, 3>>> lin(faces.size());
  int root = outer == 0 ? 1 : 0;
  lin[root] = std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)};
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (std::size_t i = 0; i < oriented[f].size(); ++i) {
      const int u = oriented[f][i];
      const int v = oriented[f][(i + 1) % oriented[f].size()];
      auto it = left_face.find({v, u});
      if (it == left_face.end()) continue;  // outer edge
      const int g = it->second;
      if (lin[g]) continue;
      // Crossing u->v from its left face to its right face adds the linear
      // form vanishing on the supporting line of (u, v).
      const Rational ux = pos[u][0], uy = pos[u][1];
      const Rational vx = pos[v][0], vy = pos[v][1];
      std::array<Rational, 3> form = {uy - vy, vx - ux, (vy - uy) * ux - (vx - ux) * uy};
      std::array<Rational, 3> next = *lin[f];
      for (int c = 0; c < 3; ++c) next[c] += form[c];
      lin[g] = next;
      q.push(g);
    }
  }

  std::vector<std::optional<Rational>> height(pos.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (static_cast<int>(f) == outer) continue;
    if (!lin[f]) throw error("maxwell_lift: dual graph of bounded faces is disconnected");
    for (int v : faces[f]) {
      const Rational z = (*lin[f])[0] * pos[v][0] + (*lin[f])[1] * pos[v][1] + (*lin[f])[2];
      if (!height[v])
        height[v] = z;
      else if (*height[v] != z)
        throw error("maxwell_lift: inconsistent face heights (no equilibrium)");
    }
  }
  std::vector<Rational> out;
  out.reserve(pos.size());
  for (auto& h : height) {
    if (!h) throw error("maxwell_lift: vertex not covered by a bounded face");
    out.push_back(*h);
  }
  return out;
}

PointConfiguration clear_denominators(const PointConfiguration& config) {
  std::vector<Rational> all;
  for (const QVector& p : config.points) all.insert(all.end(), p.begin(), p.end());
  const Integer scale = common_denominator(all);
  std::vector<QVector> scaled = config.points;
  for (QVector& p : scaled)
    for (Rational& c : p) c *= Rational(scale);
  return PointConfiguration::make(config.dim, std::move(scaled), config.labels);
}

bool has_triangle_face(const PlanarEmbedding& emb) {
  for (const auto& f : emb.faces)
    if (f.size() == 3) return true;
  return false;
}

// Tutte + Maxwell-Cremona realization; the embedding's outer face must be a
// triangle so that the bottom facet is automatically planar.
PointConfiguration realize_via_lift(const PlanarEmbedding& emb) {
  if (emb.faces[emb.outer_face].size() != 3)
    throw error("realize_via_lift: outer face must be a triangle");
  const std::vector<QVector> pos = tutte_embedding(emb);
  const std::vector<Rational> z = maxwell_lift(emb, pos);
  std::vector<QVector> points;
  points.reserve(pos.size());
  for (std::size_t v = 0; v < pos.size(); ++v) points.push_back({pos[v][0], pos[v][1], z[v]});
  return PointConfiguration::make(3, std::move(points));
}

// Embedding of the planar dual, with dual faces labelled by the vertices of
// the primal graph: the face of G* dual to vertex v is the cycle of primal
// faces around v.
PlanarEmbedding dual_embedding(const PlanarEmbedding& emb) {
  const std::vector<std::vector<int>>& faces = emb.faces;
  std::map<std::pair<int, int>, int> left_face;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      const int u = faces[f][i];
      const int v = faces[f][(i + 1) % faces[f].size()];
      left_face[{u, v}] = static_cast<int>(f);
    }

  const auto adj = emb.graph.adjacency();
  PlanarEmbedding dual;
  std::vector<std::pair<int, int>> dual_edges;
  for (int v = 0; v < emb.graph.n; ++v) {
    // Walk the rotation of faces around v.
    std::vector<int> cycle;
    int u = adj[v][0];
    const int start_face = left_face.at({v, u});
    int f = start_face;
    do {
      cycle.push_back(f);
      // Within face f's directed cycle, the edge entering v is (w, v); the
      // next face around v shares the edge {v, w}.
      const std::vector<int>& fc = faces[f];
      int w = -1;
      for (std::size_t i = 0; i < fc.size(); ++i)
        if (fc[(i + 1) % fc.size()] == v) {
          w = fc[i];
          break;
        }
      if (w < 0) throw error("dual_embedding: face around vertex does not close");
      f = left_face.at({v, w});
    } while (f != start_face);
    if (cycle.size() != adj[v].size())
      throw error("dual_embedding: rotation around vertex incomplete");
    dual.faces.push_back(cycle);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      dual_edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  dual.graph = Graph::make(static_cast<int>(faces.size()), dual_edges);
  dual.outer_face = select_outer_face(dual.faces);
  return dual;
}

QVector centroid(const std::vector<QVector>& points) {
  QVector c(points[0].size(), Rational(0));
  for (const QVector& p : points) c = vec_add(c, p);
  return vec_scale(make_rational(1, static_cast<long>(points.size())), c);
}

}  // namespace

PointConfiguration realize_3polytope(const Graph& g) {
  const SteinitzReport report = steinitz_report(MultigraphInput{
      g.n, std::vector<std::pair<int, int>>(g.edges.begin(), g.edges.end())});
  if (!report.polytopal())
    throw error("realize_3polytope: graph is not 3-polytopal (failing predicate: " +
                report.failing_predicate() + ")");
  const std::optional<PlanarEmbedding> emb = planar_embedding(g);
  if (!emb) throw error("realize_3polytope: internal error, no embedding");

  PointConfiguration realized(PointConfiguration::make(3, {}));
  if (has_triangle_face(*emb)) {
    realized = realize_via_lift(*emb);
  } else {
    // No triangular face forces a degree-3 vertex, so the dual has one;
    // realize the dual and polarize.
    const PlanarEmbedding dual = dual_embedding(*emb);
    if (!has_triangle_face(dual))
      throw error("realize_3polytope: internal error, dual has no triangle face");
    PointConfiguration dual_poly = realize_via_lift(dual);

    const QVector center = centroid(dual_poly.points);
    for (QVector& p : dual_poly.points) p = vec_sub(p, center);

    // Vertex u of g corresponds to the dual facet of primal faces around u;
    // its polar vertex solves <x, w> = 1 over that facet's vertices.
    std::vector<QVector> points;
    for (int u = 0; u < g.n; ++u) {
      const std::vector<int>& facet = dual.faces[u];
      MatrixQ a(facet.size(), 3);
      std::vector<Rational> b(facet.size(), Rational(1));
      for (std::size_t r = 0; r < facet.size(); ++r)
        for (int c = 0; c < 3; ++c) a.at(r, c) = dual_poly.points[facet[r]][c];
      LinearSolution sol = solve_linear(a, b);
      if (sol.kind != LinearSolution::Kind::unique)
        throw error("realize_3polytope: polar vertex not determined");
      points.push_back(sol.particular);
    }
    realized = PointConfiguration::make(3, std::move(points));
  }

  PointConfiguration integral = clear_denominators(realized);
  if (!is_realization(integral, lattice_from_embedding(*emb)))
    throw error("realize_3polytope: internal error, verification failed");
  return integral;
}

}  // namespace polyreal
