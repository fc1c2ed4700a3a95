#include "polyreal/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace polyreal {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
  std::uint64_t mask = 0;
  for (int v : vs) mask |= (std::uint64_t{1} << v);
  return mask;
}

}  // namespace

void FaceLattice::canonicalize() { std::sort(faces.begin(), faces.end()); }

bool FaceLattice::has_face(const Face& f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

std::vector<Face> FaceLattice::faces_of_rank(int rank) const {
  std::vector<Face> out;
  for (const Face& f : faces)
    if (f.rank == rank) out.push_back(f);
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> fv(std::max(dim(), 0), 0);
  for (const Face& f : faces)
    if (f.rank >= 0 && f.rank < dim()) ++fv[f.rank];
  return fv;
}

FaceLattice face_lattice(const HullResult& hull, const PointConfiguration& config) {
  const std::size_t m = hull.vertex_indices.size();
  if (m > 64) throw error("face_lattice: more than 64 vertices not supported");

  std::map<int, int> dense;
  for (std::size_t i = 0; i < m; ++i) dense[hull.vertex_indices[i]] = static_cast<int>(i);

  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::set<std::uint64_t> closed = {full};
  std::vector<std::uint64_t> frontier;
  for (const HullFacet& f : hull.facets) {
    std::uint64_t mask = 0;
    for (int v : f.vertices) mask |= std::uint64_t{1} << dense.at(v);
    if (closed.insert(mask).second) frontier.push_back(mask);
  }
  // Close under pairwise intersection; every face of a polytope is an
  // intersection of the facets containing it.
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t a : frontier)
      for (std::uint64_t b : closed) {
        const std::uint64_t c = a & b;
        if (closed.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  closed.insert(0);

  FaceLattice lattice;
  lattice.n_vertices = static_cast<int>(m);
  for (std::uint64_t mask : closed) {
    Face face;
    face.vertices = mask_to_vertices(mask);
    if (face.vertices.empty()) {
      face.rank = -1;
    } else {
      std::vector<QVector> pts;
      for (int v : face.vertices) pts.push_back(config.points[hull.vertex_indices[v]]);
      face.rank = affine_dim(pts);
    }
    lattice.faces.push_back(std::move(face));
  }
  lattice.canonicalize();

  // Cheap structural checks; the full diamond/Euler properties are exercised
  // by the test suites.
  for (int i = 0; i < lattice.n_vertices; ++i)
    if (!lattice.has_face(Face{0, {i}}))
      throw error("face_lattice: internal error, missing atom");
  return lattice;
}

bool lattice_isomorphic_under(const FaceLattice& l1, const FaceLattice& l2,
                              const std::vector<int>& correspondence) {
  if (l1.n_vertices != l2.n_vertices) return false;
  if (correspondence.size() != static_cast<std::size_t>(l1.n_vertices)) return false;
  std::vector<Face> relabeled;
  relabeled.reserve(l1.faces.size());
  for (const Face& f : l1.faces) {
    Face g;
    g.rank = f.rank;
    for (int v : f.vertices) {
      const int w = correspondence.at(v);
      if (w < 0 || w >= l2.n_vertices) return false;
      g.vertices.push_back(w);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    relabeled.push_back(std::move(g));
  }
  std::sort(relabeled.begin(), relabeled.end());
  return relabeled == l2.faces;
}

namespace {

// Per-vertex incidence signature: multiset of (rank, size) of containing faces.
std::vector<std::vector<std::pair<int, int>>> vertex_signatures(const FaceLattice& l) {
  std::vector<std::vector<std::pair<int, int>>> sig(l.n_vertices);
  for (const Face& f : l.faces)
    for (int v : f.vertices)
      sig[v].emplace_back(f.rank, static_cast<int>(f.vertices.size()));
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

bool extend_isomorphism(const FaceLattice& l1, const FaceLattice& l2,
                        const std::vector<std::vector<std::pair<int, int>>>& sig1,
                        const std::vector<std::vector<std::pair<int, int>>>& sig2,
                        std::vector<int>& mapping, std::vector<bool>& used, int v) {
  const int n = l1.n_vertices;
  if (v == n) return lattice_isomorphic_under(l1, l2, mapping);
  for (int w = 0; w < n; ++w) {
    if (used[w] || sig1[v] != sig2[w]) continue;
    mapping[v] = w;
    used[w] = true;
    if (extend_isomorphism(l1, l2, sig1, sig2, mapping, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool lattice_isomorphic(const FaceLattice& l1, const FaceLattice& l2) {
  if (l1.n_vertices != l2.n_vertices) return false;
  if (l1.faces.size() != l2.faces.size()) return false;
  if (l1.f_vector() != l2.f_vector()) return false;
  const auto sig1 = vertex_signatures(l1);
  const auto sig2 = vertex_signatures(l2);
  std::vector<int> mapping(l1.n_vertices, -1);
  std::vector<bool> used(l1.n_vertices, false);
  return extend_isomorphism(l1, l2, sig1, sig2, mapping, used, 0);
}

bool is_realization(const PointConfiguration& q, const FaceLattice& p_lattice) {
  if (q.size() != static_cast<std::size_t>(p_lattice.n_vertices)) return false;
  try {
    const HullResult hull = convex_hull(q);
    if (hull.vertex_indices.size() != q.size()) return false;
    return face_lattice(hull, q) == p_lattice;
  } catch (const error&) {
    return false;
  }
}

Graph edge_graph(const FaceLattice& l) {
  std::vector<std::pair<int, int>> edges;
  for (const Face& f : l.faces_of_rank(1)) {
    if (f.vertices.size() != 2) throw error("edge_graph: rank-1 face is not an edge");
    edges.emplace_back(f.vertices[0], f.vertices[1]);
  }
  return Graph::make(l.n_vertices, edges);
}

bool candidate_basis(const PointConfiguration& config, const std::vector<int>& basis) {
  std::set<int> seen;
  std::vector<QVector> pts;
  for (int idx : basis) {
    if (idx < 0 || idx >= static_cast<int>(config.size()))
      throw error("candidate_basis: index out of range");
    if (!seen.insert(idx).second) throw error("candidate_basis: duplicate index");
    pts.push_back(config.points[idx]);
  }
  return affinely_independent(pts);
}

FaceLattice face_sublattice(const FaceLattice& l, const std::vector<int>& face_vertices) {
  std::vector<int> sorted = face_vertices;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> dense;
  for (std::size_t i = 0; i < sorted.size(); ++i) dense[sorted[i]] = static_cast<int>(i);

  FaceLattice sub;
  sub.n_vertices = static_cast<int>(sorted.size());
  for (const Face& f : l.faces) {
    if (!std::includes(sorted.begin(), sorted.end(), f.vertices.begin(), f.vertices.end()))
      continue;
    Face g;
    g.rank = f.rank;
    for (int v : f.vertices) g.vertices.push_back(dense.at(v));
    std::sort(g.vertices.begin(), g.vertices.end());
    sub.faces.push_back(std::move(g));
  }
  sub.canonicalize();
  return sub;
}

bool diamond_property_holds(const FaceLattice& l) {
  const auto& faces = l.faces;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (faces[j].rank != faces[i].rank + 2) continue;
      if (!std::includes(faces[j].vertices.begin(), faces[j].vertices.end(),
                         faces[i].vertices.begin(), faces[i].vertices.end()))
        continue;
      int middles = 0;
      for (const Face& m : faces) {
        if (m.rank != faces[i].rank + 1) continue;
        if (std::includes(m.vertices.begin(), m.vertices.end(), faces[i].vertices.begin(),
                          faces[i].vertices.end()) &&
            std::includes(faces[j].vertices.begin(), faces[j].vertices.end(),
                          m.vertices.begin(), m.vertices.end()))
          ++middles;
      }
      if (middles != 2) return false;
    }
  }
  return true;
}

bool euler_relation_holds(const FaceLattice& l) {
  const int d = l.dim();
  long long sum = 0;
  for (const Face& f : l.faces) {
    if (f.rank < 0 || f.rank == d) continue;  // proper nonempty faces only
    sum += (f.rank % 2 == 0) ? 1 : -1;
  }
  const long long expected = 1 - ((d % 2 == 0) ? 1 : -1);
  return sum == expected;
}

}  // namespace polyreal
