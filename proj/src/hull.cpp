#include "polyreal/hull.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace polyreal {

namespace {

struct ChartFacet {
  QVector normal;  // chart coordinates
  Rational offset;
  std::vector<int> vertices;  // original indices, sorted

  Rational eval(const QVector& x) const { return dot(normal, x) - offset; }
};

// Canonical representative of an oriented hyperplane: scale by the absolute
// value of the first nonzero normal entry. Equal vectors iff same oriented
// hyperplane.
std::vector<Rational> plane_key(const ChartFacet& f) {
  std::vector<Rational> key = f.normal;
  key.push_back(f.offset);
  Rational scale(0);
  for (const Rational& c : f.normal)
    if (c != 0) {
      scale = rational_abs(c);
      break;
    }
  for (Rational& c : key) c /= scale;
  return key;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Greedy affine basis: indices of k+1 points spanning the affine hull.
std::vector<int> affine_basis_indices(const std::vector<QVector>& points) {
  std::vector<int> basis = {0};
  std::vector<QVector> chosen = {points[0]};
  for (std::size_t i = 1; i < points.size(); ++i) {
    chosen.push_back(points[i]);
    if (affine_dim(chosen) == static_cast<int>(chosen.size()) - 1)
      basis.push_back(static_cast<int>(i));
    else
      chosen.pop_back();
  }
  return basis;
}

// Select an affine basis among the given chart points (k-1 of them spanning
// the ridge) and append apex; used to build cone facet hyperplanes.
std::vector<QVector> ridge_spanning_points(const std::vector<QVector>& chart,
                                           const std::vector<int>& ridge, const QVector& apex,
                                           std::size_t k) {
  std::vector<QVector> span;
  for (int idx : ridge) {
    span.push_back(chart[idx]);
    if (affine_dim(span) != static_cast<int>(span.size()) - 1) span.pop_back();
    if (span.size() == k - 1) break;
  }
  span.push_back(apex);
  return span;
}

}  // namespace

HullResult convex_hull(const PointConfiguration& config) {
  const std::size_t n = config.size();
  if (n == 0) throw error("convex_hull: empty configuration");
  const int k = affine_dim(config.points);
  if (k < 1) throw error("convex_hull: degenerate input (all points equal)");

  // Chart onto the affine hull: c = L (x - o) with L = (B^T B)^-1 B^T.
  const std::vector<int> basis = affine_basis_indices(config.points);
  const QVector& origin = config.points[basis[0]];
  MatrixQ b(config.dim, k);
  for (int j = 1; j <= k; ++j) {
    const QVector diff = vec_sub(config.points[basis[j]], origin);
    for (std::size_t r = 0; r < config.dim; ++r) b.at(r, j - 1) = diff[r];
  }
  const MatrixQ bt = b.transposed();
  const MatrixQ chart_map = inverse(bt * b) * bt;  // k x d

  std::vector<QVector> chart(n);
  for (std::size_t i = 0; i < n; ++i) chart[i] = chart_map * vec_sub(config.points[i], origin);

  // Fixed interior reference: centroid of the initial simplex. The hull only
  // grows, so it stays strictly interior.
  QVector reference(k, Rational(0));
  for (int j = 0; j <= k; ++j) reference = vec_add(reference, chart[basis[j]]);
  reference = vec_scale(make_rational(1, k + 1), reference);

  std::vector<ChartFacet> facets;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<QVector> pts;
    std::vector<int> vset;
    for (int j = 0; j <= k; ++j) {
      if (j == skip) continue;
      pts.push_back(chart[basis[j]]);
      vset.push_back(basis[j]);
    }
    std::sort(vset.begin(), vset.end());
    Hyperplane h = hyperplane_through(pts, reference);
    facets.push_back(ChartFacet{h.normal, h.offset, std::move(vset)});
  }

  std::vector<bool> in_hull(n, false);
  for (int j = 0; j <= k; ++j) in_hull[basis[j]] = true;

  for (std::size_t p = 0; p < n; ++p) {
    if (in_hull[p]) continue;
    in_hull[p] = true;

    std::vector<int> visible, beneath, coplanar;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const int s = sign(facets[f].eval(chart[p]));
      if (s > 0)
        visible.push_back(static_cast<int>(f));
      else if (s < 0)
        beneath.push_back(static_cast<int>(f));
      else
        coplanar.push_back(static_cast<int>(f));
    }
    if (visible.empty()) continue;  // p inside or on the boundary: not a new vertex

    std::vector<ChartFacet> next;
    for (int f : beneath) next.push_back(facets[f]);

    // Facets containing p in their hyperplane extend to cover p.
    std::map<std::vector<Rational>, ChartFacet> merged;
    for (int f : coplanar) {
      ChartFacet ext = facets[f];
      ext.vertices = sorted_union(ext.vertices, {static_cast<int>(p)});
      merged.emplace(plane_key(ext), std::move(ext));
    }

    // Horizon ridges between a visible facet and a non-visible one spawn cone
    // facets through the ridge and p. Ridges against coplanar facets fold into
    // the extension above; cone facets that share a hyperplane merge.
    for (int fv : visible) {
      for (int fn : beneath) {
        const std::vector<int> ridge =
            sorted_intersection(facets[fv].vertices, facets[fn].vertices);
        std::vector<QVector> ridge_pts;
        for (int idx : ridge) ridge_pts.push_back(chart[idx]);
        if (affine_dim(ridge_pts) != k - 2) continue;
        const std::vector<QVector> span =
            ridge_spanning_points(chart, ridge, chart[p], static_cast<std::size_t>(k));
        Hyperplane h = hyperplane_through(span, reference);
        ChartFacet cone{h.normal, h.offset, sorted_union(ridge, {static_cast<int>(p)})};
        const auto key = plane_key(cone);
        auto it = merged.find(key);
        if (it == merged.end())
          merged.emplace(key, std::move(cone));
        else
          it->second.vertices = sorted_union(it->second.vertices, cone.vertices);
      }
    }
    for (auto& [key, f] : merged) next.push_back(std::move(f));
    facets = std::move(next);
  }

  // Final vertex determination: a point of the hull is a vertex iff its tight
  // facet normals span the chart space. Exact duplicates keep the first index.
  std::vector<std::vector<int>> tight(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const int s = sign(facets[f].eval(chart[i]));
      if (s > 0) throw error("convex_hull: internal error, point outside facet plane");
      if (s == 0) tight[i].push_back(static_cast<int>(f));
    }
  }
  std::vector<int> vertices;
  std::map<QVector, int> seen_coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (tight[i].size() < static_cast<std::size_t>(k)) continue;
    MatrixQ normals(tight[i].size(), k);
    for (std::size_t r = 0; r < tight[i].size(); ++r)
      for (int c = 0; c < k; ++c) normals.at(r, c) = facets[tight[i][r]].normal[c];
    if (rank(normals) != static_cast<std::size_t>(k)) continue;
    auto [it, inserted] = seen_coords.emplace(chart[i], static_cast<int>(i));
    if (inserted) vertices.push_back(static_cast<int>(i));
  }

  HullResult result;
  result.dim = k;
  result.vertex_indices = vertices;
  for (const ChartFacet& f : facets) {
    HullFacet out;
    for (int v : vertices)
      if (f.eval(chart[v]) == 0) out.vertices.push_back(v);
    if (affine_dim([&] {
          std::vector<QVector> pts;
          for (int v : out.vertices) pts.push_back(chart[v]);
          return pts;
        }()) != k - 1)
      throw error("convex_hull: internal error, facet vertex set does not span" );
    // Pull the chart hyperplane back to ambient coordinates.
    QVector ambient_normal = chart_map.transposed() * f.normal;
    Rational ambient_offset = f.offset + dot(ambient_normal, origin);
    out.plane = Hyperplane{std::move(ambient_normal), std::move(ambient_offset)};
    result.facets.push_back(std::move(out));
  }
  return result;
}

}  // namespace polyreal
