#pragma once

// Small planar helpers: convex polygons clipped by half-planes (edges keep the
// label of the constraint that produced them), shoelace areas, 2D hulls and
// triangle quadrature.

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace minkprob {

using Vec2 = Eigen::Vector2d;

struct ConvexPolygon {
  std::vector<Vec2> points;  // counter-clockwise
  std::vector<int> labels;   // labels[i] tags the edge points[i] -> points[i+1]

  static ConvexPolygon box(double half_width, const Vec2& center = Vec2::Zero(), int label = -1);
  /// Regular n-gon circumscribing the circle of the given radius.
  static ConvexPolygon circumscribed(double radius, int sides, int label = -1);

  bool empty() const { return points.size() < 3; }
  double area() const;
  Vec2 centroid() const;

  /// Keeps {p : <normal, p> <= offset}.  The new edge carries `label`.
  void clip(const Vec2& normal, double offset, int label);

  /// True when some edge still carries `label`.
  bool has_label(int label) const;
};

/// Shoelace area of a (possibly non-convex) simple polygon, positive when ccw.
double signed_area(const std::vector<Vec2>& pts);

/// Andrew's monotone chain; returns the hull counter-clockwise without
/// collinear points.  Points closer than `merge_tol` are merged first.
std::vector<Vec2> convex_hull_2d(std::vector<Vec2> pts, double merge_tol = 0.0);

/// Integral of f over a triangle with a degree-5 (7-point) rule, refined
/// uniformly `levels` times.
double integrate_triangle(const Vec2& a, const Vec2& b, const Vec2& c,
                          const std::function<double(const Vec2&)>& f, int levels = 0);

inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace minkprob
