#include "minkprob/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minkprob {

ConvexPolygon ConvexPolygon::box(double half_width, const Vec2& center, int label) {
  ConvexPolygon p;
  p.points = {center + Vec2(-half_width, -half_width), center + Vec2(half_width, -half_width),
              center + Vec2(half_width, half_width), center + Vec2(-half_width, half_width)};
  p.labels.assign(4, label);
  return p;
}

ConvexPolygon ConvexPolygon::circumscribed(double radius, int sides, int label) {
  ConvexPolygon p;
  const double r = radius / std::cos(std::numbers::pi / sides);
  for (int k = 0; k < sides; ++k) {
    const double a = 2.0 * std::numbers::pi * (k + 0.5) / sides;
    p.points.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  p.labels.assign(static_cast<std::size_t>(sides), label);
  return p;
}

double signed_area(const std::vector<Vec2>& pts) {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) s += cross2(pts[i], pts[(i + 1) % n]);
  return 0.5 * s;
}

double ConvexPolygon::area() const { return empty() ? 0.0 : std::abs(signed_area(points)); }

Vec2 ConvexPolygon::centroid() const {
  if (points.empty()) return Vec2::Zero();
  Vec2 c = Vec2::Zero();
  double a = 0.0;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = cross2(points[i], points[(i + 1) % n]);
    a += w;
    c += w * (points[i] + points[(i + 1) % n]);
  }
  if (std::abs(a) < 1e-300) {
    Vec2 m = Vec2::Zero();
    for (const auto& p : points) m += p;
    return m / static_cast<double>(n);
  }
  return c / (3.0 * a);
}

void ConvexPolygon::clip(const Vec2& normal, double offset, int label) {
  const std::size_t n = points.size();
  if (n == 0) return;
  std::vector<Vec2> out_pts;
  std::vector<int> out_labels;
  out_pts.reserve(n + 1);
  out_labels.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = points[i];
    const Vec2& q = points[(i + 1) % n];
    const double dp = normal.dot(p) - offset;
    const double dq = normal.dot(q) - offset;
    if (dp <= 0.0) {
      out_pts.push_back(p);
      out_labels.push_back(labels[i]);
      if (dq > 0.0) {
        // leaving: x -> (next entry point) runs along the new constraint
        const double t = dp / (dp - dq);
        out_pts.push_back(p + t * (q - p));
        out_labels.push_back(label);
      }
    } else if (dq <= 0.0) {
      const double t = dp / (dp - dq);
      out_pts.push_back(p + t * (q - p));
      out_labels.push_back(labels[i]);
    }
  }
  points = std::move(out_pts);
  labels = std::move(out_labels);
  if (points.size() < 3) {
    points.clear();
    labels.clear();
  }
}

bool ConvexPolygon::has_label(int label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::vector<Vec2> convex_hull_2d(std::vector<Vec2> pts, double merge_tol) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  if (merge_tol > 0.0) {
    std::vector<Vec2> merged;
    for (const auto& p : pts) {
      bool dup = false;
      for (auto it = merged.rbegin(); it != merged.rend() && p[0] - (*it)[0] <= merge_tol; ++it) {
        if ((p - *it).norm() <= merge_tol) {
          dup = true;
          break;
        }
      }
      if (!dup) merged.push_back(p);
    }
    pts = std::move(merged);
  } else {
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

double triangle_rule(const Vec2& a, const Vec2& b, const Vec2& c,
                     const std::function<double(const Vec2&)>& f) {
  // Radon's 7-point degree-5 rule.
  static const double w0 = 9.0 / 40.0;
  static const double a1 = (6.0 - std::sqrt(15.0)) / 21.0, w1 = (155.0 - std::sqrt(15.0)) / 1200.0;
  static const double a2 = (6.0 + std::sqrt(15.0)) / 21.0, w2 = (155.0 + std::sqrt(15.0)) / 1200.0;
  const double area = 0.5 * std::abs(cross2(b - a, c - a));
  auto at = [&](double l0, double l1, double l2) { return f(l0 * a + l1 * b + l2 * c); };
  double s = w0 * at(1.0 / 3, 1.0 / 3, 1.0 / 3);
  const double b1 = 1.0 - 2.0 * a1, b2 = 1.0 - 2.0 * a2;
  s += w1 * (at(a1, a1, b1) + at(a1, b1, a1) + at(b1, a1, a1));
  s += w2 * (at(a2, a2, b2) + at(a2, b2, a2) + at(b2, a2, a2));
  return s * area;
}

}  // namespace

double integrate_triangle(const Vec2& a, const Vec2& b, const Vec2& c,
                          const std::function<double(const Vec2&)>& f, int levels) {
  if (levels <= 0) return triangle_rule(a, b, c, f);
  const Vec2 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
  return integrate_triangle(a, ab, ca, f, levels - 1) + integrate_triangle(ab, b, bc, f, levels - 1) +
         integrate_triangle(ca, bc, c, f, levels - 1) + integrate_triangle(ab, bc, ca, f, levels - 1);
}

}  // namespace minkprob
