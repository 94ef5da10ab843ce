#include "minkprob/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minkprob {

double LaguerreCell::facet_length(int j) const {
  double len = 0.0;
  const std::size_t n = polygon.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (polygon.labels[i] == j) len += (polygon.points[(i + 1) % n] - polygon.points[i]).norm();
  }
  return len;
}

LaguerreCell laguerre_cell(const Vec2& x, double h, std::span<const Vec2> ys, std::span<const double> heights) {
  LaguerreCell cell;
  double slope = 0.0;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const double d = (ys[j] - x).norm();
    if (d > 0.0) slope = std::max(slope, std::abs(heights[j] - h) / d);
  }
  const double box = 1e3 * (1.0 + slope);
  cell.polygon = ConvexPolygon::box(box, Vec2::Zero(), -1);
  for (std::size_t j = 0; j < ys.size() && !cell.polygon.empty(); ++j) {
    const Vec2 n = ys[j] - x;
    if (n.squaredNorm() == 0.0) {
      if (heights[j] < h) {
        cell.polygon.points.clear();
        cell.polygon.labels.clear();
      }
      continue;
    }
    cell.polygon.clip(n, heights[j] - h, static_cast<int>(j));
  }
  cell.bounded = !cell.polygon.has_label(-1);
  cell.area = cell.bounded ? cell.polygon.area() : std::numeric_limits<double>::infinity();
  if (cell.polygon.empty()) cell.area = 0.0;
  return cell;
}

double laguerre_area(const Vec2& x, double h, std::span<const Vec2> ys, std::span<const double> heights) {
  return laguerre_cell(x, h, ys, heights).area;
}

}  // namespace minkprob
