#include "polyreal/geometry.hpp"

#include <set>

namespace polyreal {

QVector vec_sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw error("vec_sub: dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector vec_add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw error("vec_add: dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector vec_scale(const Rational& s, const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw error("dot: dimension mismatch");
  Rational out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

PointConfiguration PointConfiguration::make(std::size_t dim, std::vector<QVector> points,
                                            std::vector<std::string> labels) {
  PointConfiguration config;
  config.dim = dim;
  for (const QVector& p : points)
    if (p.size() != dim) throw error("PointConfiguration: point has wrong dimension");
  if (labels.empty()) {
    labels.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) labels.push_back("p" + std::to_string(i + 1));
  }
  if (labels.size() != points.size())
    throw error("PointConfiguration: label count does not match point count");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw error("PointConfiguration: duplicate labels");
  config.points = std::move(points);
  config.labels = std::move(labels);
  return config;
}

std::size_t PointConfiguration::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw error("PointConfiguration: no point labelled '" + label + "'");
}

int affine_dim(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  MatrixQ diffs(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < points[0].size(); ++c)
      diffs.at(i - 1, c) = points[i][c] - points[0][c];
  return static_cast<int>(rank(diffs));
}

int affine_dim(const PointConfiguration& config) {
  if (config.points.empty()) throw error("affine_dim: empty configuration");
  return affine_dim(config.points);
}

bool affinely_independent(const std::vector<QVector>& points) {
  return affine_dim(points) == static_cast<int>(points.size()) - 1;
}

namespace {
Rational cross2(const QVector& u, const QVector& v) { return u[0] * v[1] - u[1] * v[0]; }
}  // namespace

LineIntersection line_intersection(const QVector& a1, const QVector& a2,
                                   const QVector& b1, const QVector& b2) {
  if (a1.size() != 2 || a2.size() != 2 || b1.size() != 2 || b2.size() != 2)
    throw error("line_intersection: points must be planar");
  if (a1 == a2 || b1 == b2) throw error("line_intersection: coincident defining points");

  const QVector da = vec_sub(a2, a1);
  const QVector db = vec_sub(b2, b1);
  const Rational denom = cross2(da, db);
  if (denom == 0) {
    // Parallel directions: identical iff b1 lies on line a.
    if (cross2(da, vec_sub(b1, a1)) == 0) return LinesIdentical{};
    return LinesParallel{};
  }
  const Rational t = cross2(vec_sub(b1, a1), db) / denom;
  return LinePoint{vec_add(a1, vec_scale(t, da))};
}

bool collinear(const std::vector<QVector>& points) {
  if (points.size() < 3) throw error("collinear: needs at least 3 points");
  return affine_dim(points) <= 1;
}

AffineChart AffineChart::build(const std::vector<QVector>& points) {
  if (points.empty()) throw error("AffineChart: no points");
  AffineChart chart;
  chart.basis_points = {0};
  std::vector<QVector> chosen = {points[0]};
  for (std::size_t i = 1; i < points.size(); ++i) {
    chosen.push_back(points[i]);
    if (affine_dim(chosen) == static_cast<int>(chosen.size()) - 1)
      chart.basis_points.push_back(static_cast<int>(i));
    else
      chosen.pop_back();
  }
  chart.k = static_cast<int>(chart.basis_points.size()) - 1;
  chart.origin = points[0];
  const std::size_t d = points[0].size();
  chart.basis = MatrixQ(d, chart.k);
  for (int j = 1; j <= chart.k; ++j) {
    const QVector diff = vec_sub(points[chart.basis_points[j]], chart.origin);
    for (std::size_t r = 0; r < d; ++r) chart.basis.at(r, j - 1) = diff[r];
  }
  const MatrixQ bt = chart.basis.transposed();
  chart.map = inverse(bt * chart.basis) * bt;
  return chart;
}

Hyperplane hyperplane_through(const std::vector<QVector>& points, const QVector& reference) {
  if (points.empty()) throw error("hyperplane_through: no points");
  const std::size_t d = points[0].size();
  if (points.size() != d)
    throw error("hyperplane_through: need exactly d points in R^d");
  if (d == 1) {
    // A hyperplane in R^1 is a point; the normal direction is free.
    Hyperplane h{{Rational(1)}, points[0][0]};
    const Rational side = h.eval(reference);
    if (side == 0) throw error("hyperplane_through: reference lies on hyperplane");
    if (side > 0) {
      h.normal[0] = -h.normal[0];
      h.offset = -h.offset;
    }
    return h;
  }
  MatrixQ m(d - 1, d);
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) m.at(i - 1, c) = points[i][c] - points[0][c];
  const auto basis = null_space(m);
  if (basis.size() != 1) throw error("hyperplane_through: points do not span a hyperplane");
  Hyperplane h{basis[0], dot(basis[0], points[0])};
  const Rational side = h.eval(reference);
  if (side == 0) throw error("hyperplane_through: reference lies on hyperplane");
  if (side > 0) {
    h.normal = vec_scale(Rational(-1), h.normal);
    h.offset = -h.offset;
  }
  return h;
}

}  // namespace polyreal
