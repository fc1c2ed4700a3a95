#ifndef POLYREAL_STEINITZ_HPP
#define POLYREAL_STEINITZ_HPP

#include <optional>
#include <vector>

#include "polyreal/graph.hpp"
#include "polyreal/lattice.hpp"

namespace polyreal {

/// A combinatorial embedding of a connected planar graph.
struct PlanarEmbedding {
  Graph graph;
  std::vector<std::vector<int>> faces;  // directed vertex cycles
  int outer_face = 0;                   // smallest face, ties by lex smallest cycle

  std::size_t face_count() const { return faces.size(); }
};

/// No loops and no parallel edges.
bool is_simple(const MultigraphInput& g);

/// Planarity with a combinatorial embedding witness (faces satisfy Euler's
/// formula). The witness is produced for connected graphs; is_planar itself
/// works for any simple graph.
std::optional<PlanarEmbedding> planar_embedding(const Graph& g);
bool is_planar(const Graph& g);

/// No vertex cut of size <= 2 (three internally disjoint paths between every
/// pair, by Menger). Throws on fewer than 4 vertices.
bool is_3connected(const Graph& g);

/// Steinitz's characterization: simple, planar and 3-connected.
bool is_3polytopal(const MultigraphInput& g);

struct SteinitzReport {
  bool simple = false;
  bool planar = false;
  bool threeconnected = false;
  bool polytopal() const { return simple && planar && threeconnected; }
  /// Name of the first failing predicate, or empty when polytopal.
  std::string failing_predicate() const;
};
SteinitzReport steinitz_report(const MultigraphInput& g);

/// The face lattice determined by an embedding's cycles (vertices, edges,
/// face cycles, empty and full face).
FaceLattice lattice_from_embedding(const PlanarEmbedding& emb);

/// Integer-coordinate realization of a 3-polytopal graph: Tutte embedding
/// with all-ones weights over a convex rational outer polygon, lifted by the
/// Maxwell-Cremona correspondence, passing through the polar dual when the
/// graph has no triangular face. Denominators are cleared at the end and the
/// result is verified exactly against the embedding's face lattice.
PointConfiguration realize_3polytope(const Graph& g);

/// e - 6 for a 3-polytope lattice with e edges.
int realization_space_dim_3(const FaceLattice& l);

}  // namespace polyreal

#endif  // POLYREAL_STEINITZ_HPP
