#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qteich/coords.hpp"
#include "qteich/fatgraph.hpp"

namespace qteich {

// 2x2 real matrix, read projectively (M and -M are the same element).
struct Matrix2 {
  double a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  // Scale so |det| = 1; requires det != 0.
  Matrix2 normalized() const {
    double dd = det();
    if (dd == 0) throw std::domain_error("singular matrix");
    double s = 1.0 / std::sqrt(std::abs(dd));
    return {a * s, b * s, c * s, d * s};
  }

  std::string str() const {
    std::ostringstream out;
    out << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
    return out.str();
  }
};

// Max-norm distance between projective classes: min over sign of |M1 -+ M2|
// after det-normalization.
inline double projective_distance(const Matrix2& m1, const Matrix2& m2) {
  Matrix2 x = m1.normalized(), y = m2.normalized();
  auto dist = [](const Matrix2& u, const Matrix2& v) {
    return std::max(std::max(std::abs(u.a - v.a), std::abs(u.b - v.b)),
                    std::max(std::abs(u.c - v.c), std::abs(u.d - v.d)));
  };
  Matrix2 yn{-y.a, -y.b, -y.c, -y.d};
  return std::min(dist(x, y), dist(x, yn));
}

inline bool projectively_equal(const Matrix2& m1, const Matrix2& m2, double tol = 1e-12) {
  return projective_distance(m1, m2) <= tol;
}

// Edge and turn matrices of the holonomy representation.
inline Matrix2 edge_matrix(double z) { return {0, std::exp(z / 2), -std::exp(-z / 2), 0}; }
inline Matrix2 turn_matrix() { return {1, 1, -1, 0}; }
inline Matrix2 turn_matrix_inverse() { return {0, -1, 1, 1}; }

// A path on the triangulated companion graph: long edges traverse an edge of
// the underlying graph, turns move along a corner triangle.
struct PathStep {
  enum class Kind { LongEdge, TurnPositive, TurnNegative };
  Kind kind = Kind::LongEdge;
  std::string edge;

  static PathStep long_edge(std::string label) { return {Kind::LongEdge, std::move(label)}; }
  static PathStep turn_positive() { return {Kind::TurnPositive, {}}; }
  static PathStep turn_negative() { return {Kind::TurnNegative, {}}; }
};

using GraphPath = std::vector<PathStep>;

// Validity: corners are half-edges; a long edge must leave from a corner of
// that edge and lands on the opposite corner; positive turns advance
// counterclockwise within the vertex triangle. Returns the final corner.
inline int trace_path(const FatGraph& g, const GraphPath& path, int start_corner) {
  int corner = start_corner;
  for (size_t i = 0; i < path.size(); ++i) {
    const auto& s = path[i];
    switch (s.kind) {
      case PathStep::Kind::LongEdge: {
        int e = g.edge_index(s.edge);
        if (g.edge_of(corner) != e)
          throw std::invalid_argument("path step " + std::to_string(i) + ": long edge '" +
                                      s.edge + "' is not incident to the current corner");
        corner = g.opposite(corner);
        break;
      }
      case PathStep::Kind::TurnPositive:
        corner = g.next_at_vertex(corner);
        break;
      case PathStep::Kind::TurnNegative:
        corner = g.prev_at_vertex(corner);
        break;
    }
  }
  return corner;
}

inline bool path_is_closed(const FatGraph& g, const GraphPath& path, int start_corner) {
  return g.vertex_of(trace_path(g, path, start_corner)) == g.vertex_of(start_corner);
}

// Ordered product X_N ... X_1 (first step rightmost). When a start corner is
// given the step sequence is validated against the graph.
inline Matrix2 holonomy(const FatGraph& g, const EdgeCoordinates& c, const GraphPath& path,
                        std::optional<int> start_corner = std::nullopt) {
  if (start_corner) trace_path(g, path, *start_corner);
  Matrix2 m = Matrix2::identity();
  for (const auto& s : path) {
    Matrix2 x;
    switch (s.kind) {
      case PathStep::Kind::LongEdge:
        x = edge_matrix(c.at(s.edge));
        break;
      case PathStep::Kind::TurnPositive:
        x = turn_matrix();
        break;
      case PathStep::Kind::TurnNegative:
        x = turn_matrix_inverse();
        break;
    }
    m = x * m;
  }
  return m;
}

// Closed path around a face: alternating long edge / positive turn, starting
// at the face's first corner.
inline GraphPath face_path(const FatGraph& g, const std::vector<int>& face) {
  GraphPath p;
  for (int h : face) {
    p.push_back(PathStep::long_edge(g.edge_label(g.edge_of(h))));
    p.push_back(PathStep::turn_positive());
  }
  return p;
}

// l = |log(lambda1/lambda2)| for hyperbolic or parabolic elements, computed
// from the trace: l = 2 arccosh(|tr|/2) after det-normalization.
inline double geodesic_length(const Matrix2& m) {
  double dd = m.det();
  if (dd <= 0) throw std::domain_error("geodesic_length: determinant must be positive");
  double t = std::abs(m.trace()) / std::sqrt(dd);
  if (t < 2 - 1e-12) throw std::domain_error("geodesic_length: elliptic element (|trace| < 2)");
  if (t < 2) t = 2;
  return 2 * std::acosh(t / 2);
}

}  // namespace qteich
