#ifndef POLYREAL_CONSTRUCTIONS_HPP
#define POLYREAL_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyreal/lattice.hpp"

namespace polyreal {

/// Homogeneous projective map on R^k, stored as a (k+1)x(k+1) matrix with
/// nonzero determinant.
struct ProjectiveTransform {
  MatrixQ matrix;

  /// Image of an affine point; throws if the image lies at infinity.
  QVector apply(const QVector& point) const;
};

/// Replaces point i by two points on a ray into a fresh dimension: ambient
/// dimension grows to d+1, the remaining points are embedded at height 0 and
/// (p_i, h1), (p_i, h2) are appended with fresh "<label>_lo"/"<label>_hi"
/// labels. Requires 0 < h1 < h2.
PointConfiguration lawrence_extension(const PointConfiguration& config, std::size_t index,
                                      const Rational& h1 = Rational(1),
                                      const Rational& h2 = Rational(2));

/// Recovers the deleted point as the intersection of the line through the two
/// labelled points with the base hyperplane (last coordinate zero). Returns
/// the full ambient point, whose last coordinate is 0.
QVector reconstruct_point(const PointConfiguration& extended, const std::string& label_lo,
                          const std::string& label_hi);

struct PolytopeData {
  PointConfiguration config;
  HullResult hull;
  FaceLattice lattice;
};

/// Builds (config, hull, lattice) for a configuration whose points must all
/// be hull vertices.
PolytopeData polytope_from_points(const PointConfiguration& config);

/// Lawrence extensions on every point of a planar configuration, one after
/// the other, each into a fresh direction: 2n points spanning dimension n+2,
/// all of them vertices of their hull.
PolytopeData lawrence_polytope(const PointConfiguration& config);

/// Hexagon on a conic plus the three opposite-edge intersection points
/// (labels m1, m2, m3 after h1..h6). The hexagon must be in convex position
/// order; an opposite-edge intersection at infinity or a failed Pascal
/// collinearity check is a configuration error.
PointConfiguration pascal_configuration(const std::vector<QVector>& hexagon);

/// Default hexagon: the parabola y = x^2 at x = 1, 2, 3, 4, 5, 7 (chosen so
/// that no two opposite edges are parallel).
PointConfiguration pascal_configuration();

/// Lawrence extensions on the three intersection points of the Pascal
/// configuration: a 5-dimensional polytope with 12 vertices that keeps the
/// hexagon as a 2-face and gains the six new points as one facet.
PolytopeData pascal_5polytope();

/// Exact projective transform carrying f1's points to f2's under the
/// correspondence (up to per-point positive scalars in homogeneous
/// coordinates), or nullopt when no such map exists. Both configurations
/// must be full-dimensional in their common ambient dimension.
std::optional<ProjectiveTransform> projective_equivalence(
    const PointConfiguration& f1, const PointConfiguration& f2,
    const std::vector<int>& correspondence);

struct ConnectedSumResult {
  PointConfiguration config;
  HullResult hull;
  FaceLattice lattice;
  std::vector<int> p1_to_result;  // vertex index map from p1
  std::vector<int> p2_to_result;  // vertex index map from p2 (facet points land on p1's)
  Rational placement_parameter;   // the schedule value that succeeded
};

/// Glues p2 onto p1 along the projectively equivalent facets f1 and f2
/// (correspondence maps f1 vertices to f2 vertices): the merged polytope has
/// all facets of both sides except the glued pair, and the boundary complex
/// of the shared facet survives. The placement moves p2 beyond f1's
/// hyperplane by a rational parameter searched over 1, 1/2, 1/4, ...,
/// 1/2^20; exhausting the schedule raises a placement-failure error.
ConnectedSumResult connected_sum(const PolytopeData& p1, const std::vector<int>& f1,
                                 const PolytopeData& p2, const std::vector<int>& f2,
                                 const std::vector<std::pair<int, int>>& correspondence);

enum class FlatnessClass { triangle, pyramid, prism, tent, none };
std::string to_string(FlatnessClass c);

/// Sufficient catalog of necessarily-flat facet types: in ambient dimension 3
/// only triangles qualify; in ambient dimension 4 pyramids, prisms and tents
/// are recognized (tents against a table of Lawrence-extension tents over
/// k-gons, k <= 12). "none" means not certified flat.
FlatnessClass flatness_class(const FaceLattice& facet, int ambient_dim);

/// Tent over a k-gon: the hull of a convex rational k-gon at height 0 and a
/// Lawrence extension of a point outside it that is beyond exactly
/// `visible_edges` of its edges. Throws if no such exterior position exists
/// in the deterministic search schedule.
PointConfiguration tent_configuration(int gon, int visible_edges);

}  // namespace polyreal

#endif  // POLYREAL_CONSTRUCTIONS_HPP
