// Shared fixture builders for the test suites: classic graphs and polytopes.
#ifndef POLYREAL_TESTS_CORPUS_HPP
#define POLYREAL_TESTS_CORPUS_HPP

#include <vector>

#include "polyreal/graph.hpp"
#include "polyreal/geometry.hpp"

namespace corpus {

using polyreal::Graph;
using polyreal::PointConfiguration;
using polyreal::QVector;
using polyreal::Rational;
using polyreal::make_rational;

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::make(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::make(a + b, edges);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::make(n, edges);
}

/// Hub 0 joined to the cycle 1..n.
inline Graph wheel_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % n + 1);
  }
  return Graph::make(n + 1, edges);
}

inline Graph cube_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      const int u = v ^ (1 << bit);
      if (v < u) edges.emplace_back(v, u);
    }
  return Graph::make(8, edges);
}

inline Graph octahedron_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return Graph::make(6, edges);
}

/// n-gonal prism: vertices 0..n-1 bottom, n..2n-1 top.
inline Graph prism_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph::make(2 * n, edges);
}

/// Dodecahedron as the generalized Petersen graph GP(10, 2).
inline Graph dodecahedron_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return Graph::make(20, edges);
}

inline PointConfiguration cube_config(int d = 3) {
  std::vector<QVector> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    QVector p(d);
    for (int c = 0; c < d; ++c) p[c] = (mask >> c) & 1 ? Rational(1) : Rational(-1);
    pts.push_back(p);
  }
  return PointConfiguration::make(d, pts);
}

inline PointConfiguration cross_config(int d = 3) {
  std::vector<QVector> pts;
  for (int c = 0; c < d; ++c)
    for (int s = 0; s < 2; ++s) {
      QVector p(d, Rational(0));
      p[c] = s == 0 ? Rational(1) : Rational(-1);
      pts.push_back(p);
    }
  return PointConfiguration::make(d, pts);
}

inline PointConfiguration simplex_config(int d) {
  std::vector<QVector> pts;
  pts.push_back(QVector(d, Rational(0)));
  for (int c = 0; c < d; ++c) {
    QVector p(d, Rational(0));
    p[c] = 1;
    pts.push_back(p);
  }
  return PointConfiguration::make(d, pts);
}

inline PointConfiguration square_config() {
  return PointConfiguration::make(
      2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
          {Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
}

/// Square base (+-1, +-1, 0) in indices 0..3 cyclic, apex (0,0,2).
inline PointConfiguration square_pyramid_config() {
  return PointConfiguration::make(3, {{Rational(-1), Rational(-1), Rational(0)},
                                      {Rational(1), Rational(-1), Rational(0)},
                                      {Rational(1), Rational(1), Rational(0)},
                                      {Rational(-1), Rational(1), Rational(0)},
                                      {Rational(0), Rational(0), Rational(2)}});
}

/// Triangular prism: triangle at z=0 (0..2) and z=2 (3..5).
inline PointConfiguration triangular_prism_config() {
  return PointConfiguration::make(3, {{Rational(0), Rational(0), Rational(0)},
                                      {Rational(2), Rational(0), Rational(0)},
                                      {Rational(0), Rational(2), Rational(0)},
                                      {Rational(0), Rational(0), Rational(2)},
                                      {Rational(2), Rational(0), Rational(2)},
                                      {Rational(0), Rational(2), Rational(2)}});
}

/// Rational point on the unit circle, tangent half-angle parameter t.
inline QVector circle_point(const Rational& t) {
  const Rational t2 = t * t;
  return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

/// Convex rational n-gon on the unit circle.
inline PointConfiguration polygon_config(int n) {
  std::vector<QVector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(circle_point(make_rational(i, 1)));
  return PointConfiguration::make(2, pts);
}

}  // namespace corpus

#endif  // POLYREAL_TESTS_CORPUS_HPP
