#ifndef POLYREAL_HULL_HPP
#define POLYREAL_HULL_HPP

#include <vector>

#include "polyreal/geometry.hpp"

namespace polyreal {

struct HullFacet {
  std::vector<int> vertices;  // indices into the input configuration, sorted
  Hyperplane plane;           // ambient; interior side is dot(normal, x) < offset
};

struct HullResult {
  int dim = 0;  // dimension of the hull (affine dimension of the input)
  std::vector<HullFacet> facets;
  std::vector<int> vertex_indices;  // input points that are 0-faces, sorted
};

/// Exact convex hull by incremental insertion (beneath-beyond) with exact
/// orientation tests. Coplanar pieces are kept merged, so facets come out
/// irredundant and possibly non-simplicial. Handles inputs whose affine hull
/// is a proper subspace of the ambient space; facet hyperplanes are reported
/// in ambient coordinates and support the hull there.
HullResult convex_hull(const PointConfiguration& config);

}  // namespace polyreal

#endif  // POLYREAL_HULL_HPP
