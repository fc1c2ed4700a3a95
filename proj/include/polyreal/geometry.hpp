#ifndef POLYREAL_GEOMETRY_HPP
#define POLYREAL_GEOMETRY_HPP

#include <string>
#include <variant>
#include <vector>

#include "polyreal/matrix.hpp"
#include "polyreal/rational.hpp"

namespace polyreal {

using QVector = std::vector<Rational>;

QVector vec_sub(const QVector& a, const QVector& b);
QVector vec_add(const QVector& a, const QVector& b);
QVector vec_scale(const Rational& s, const QVector& a);
Rational dot(const QVector& a, const QVector& b);

/// An ordered list of labelled points with exact coordinates.
struct PointConfiguration {
  std::size_t dim = 0;
  std::vector<QVector> points;
  std::vector<std::string> labels;

  std::size_t size() const { return points.size(); }

  /// Validates shape and distinct labels; default labels "p1", "p2", ...
  static PointConfiguration make(std::size_t dim, std::vector<QVector> points,
                                 std::vector<std::string> labels = {});

  std::size_t index_of_label(const std::string& label) const;
};

/// Points x with dot(normal, x) = offset; normal is never the zero vector.
struct Hyperplane {
  QVector normal;
  Rational offset;

  Rational eval(const QVector& x) const { return dot(normal, x) - offset; }
};

/// Dimension of the affine hull of the given points (empty set has dim -1,
/// a single point 0). Throws on an empty configuration when called through
/// the PointConfiguration overload.
int affine_dim(const std::vector<QVector>& points);
int affine_dim(const PointConfiguration& config);

/// Affinely independent iff affine_dim == count - 1.
bool affinely_independent(const std::vector<QVector>& points);

struct LinePoint {
  QVector point;
};
struct LinesParallel {};
struct LinesIdentical {};
using LineIntersection = std::variant<LinePoint, LinesParallel, LinesIdentical>;

/// Exact intersection of the two lines spanned by (a1,a2) and (b1,b2) in the
/// plane. Coincident defining points are a degenerate-line error.
LineIntersection line_intersection(const QVector& a1, const QVector& a2,
                                   const QVector& b1, const QVector& b2);

/// True iff all points (>= 3 required) lie on one line.
bool collinear(const std::vector<QVector>& points);

/// Hyperplane through d affinely independent points in R^d, oriented so that
/// eval(reference) < 0. Throws if the points do not span a hyperplane or the
/// reference lies on it.
Hyperplane hyperplane_through(const std::vector<QVector>& points, const QVector& reference);

/// Exact chart of the affine hull of a point set: a bijection between the
/// hull (dimension k) and R^k with rational coefficients both ways.
struct AffineChart {
  int k = 0;
  QVector origin;
  MatrixQ basis;                  // d x k, columns span the hull directions
  MatrixQ map;                    // k x d, left inverse of basis
  std::vector<int> basis_points;  // indices of the k+1 chosen spanning points

  static AffineChart build(const std::vector<QVector>& points);

  QVector to_chart(const QVector& ambient) const { return map * vec_sub(ambient, origin); }
  QVector to_ambient(const QVector& chart) const { return vec_add(origin, basis * chart); }
};

}  // namespace polyreal

#endif  // POLYREAL_GEOMETRY_HPP
