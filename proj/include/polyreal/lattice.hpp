#ifndef POLYREAL_LATTICE_HPP
#define POLYREAL_LATTICE_HPP

#include <vector>

#include "polyreal/graph.hpp"
#include "polyreal/hull.hpp"

namespace polyreal {

struct Face {
  int rank = -1;              // affine dimension of the face, -1 for the empty face
  std::vector<int> vertices;  // sorted vertex indices

  bool operator==(const Face&) const = default;
  auto operator<=>(const Face&) const = default;
};

/// The combinatorial type of a polytope: all faces as vertex subsets,
/// graded by dimension, kept in canonical (rank, lexicographic) order.
/// Vertex indices run over the polytope's vertices 0..n_vertices-1.
struct FaceLattice {
  int n_vertices = 0;
  std::vector<Face> faces;

  int dim() const { return faces.empty() ? -1 : faces.back().rank; }
  bool has_face(const Face& f) const;
  std::vector<Face> faces_of_rank(int rank) const;
  std::vector<Face> facets() const { return faces_of_rank(dim() - 1); }
  /// Face counts by rank 0..dim-1 (the f-vector).
  std::vector<std::size_t> f_vector() const;

  bool operator==(const FaceLattice&) const = default;

  void canonicalize();
};

/// Builds the face lattice of a hull by closing the facet vertex sets under
/// intersection. When the hull has non-vertex input points, lattice indices
/// are positions in hull.vertex_indices (dense reindexing in increasing input
/// order); with all points vertices this is the identity.
FaceLattice face_lattice(const HullResult& hull, const PointConfiguration& config);

/// True iff relabeling l1's faces through the correspondence (correspondence[i]
/// is l2's index for l1's vertex i) yields exactly l2's face set.
bool lattice_isomorphic_under(const FaceLattice& l1, const FaceLattice& l2,
                              const std::vector<int>& correspondence);

/// True iff some vertex bijection makes the lattices equal. Backtracking
/// search with incidence-signature pruning; intended for small lattices.
bool lattice_isomorphic(const FaceLattice& l1, const FaceLattice& l2);

/// True iff q's hull has every point as a vertex and its face lattice equals
/// p_lattice under the identity correspondence. Degenerate q yields false.
bool is_realization(const PointConfiguration& q, const FaceLattice& p_lattice);

/// Graph whose edges are the rank-1 faces.
Graph edge_graph(const FaceLattice& l);

/// True iff the chosen points are affinely independent in this realization.
bool candidate_basis(const PointConfiguration& config, const std::vector<int>& basis);

/// Restriction of the lattice to faces contained in the given face (a facet,
/// usually): the face's own lattice, with vertices reindexed densely.
FaceLattice face_sublattice(const FaceLattice& l, const std::vector<int>& face_vertices);

/// Diamond property: every rank-2 interval contains exactly 4 elements.
bool diamond_property_holds(const FaceLattice& l);

/// Euler relation: sum of (-1)^rank over proper nonempty faces equals
/// 1 - (-1)^dim.
bool euler_relation_holds(const FaceLattice& l);

}  // namespace polyreal

#endif  // POLYREAL_LATTICE_HPP
