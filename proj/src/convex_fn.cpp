#include "minkprob/convex_fn.hpp"

#include "minkprob/lower_hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkprob {

double homog_extension(const BallFunction& h, const MinkVector& X) {
  if (!(X[2] > 0.0) || mink_inner(X, X) >= 0.0) throw DomainError("homog_extension: X is not future time-like");
  const double z = X[2];
  return z * h(BallPoint(X[0] / z, X[1] / z));
}

double hyperbolic_restriction(const BallFunction& h, const BallPoint& x) {
  const double l = lambda(x);
  if (l <= 0.0) throw DomainError("hyperbolic_restriction: point on the boundary");
  return h(x) / l;
}

BallFunction act_on_ball_function(const Isometry& sigma, BallFunction h) {
  const Mat3 ginv = lorentz_inverse(sigma.linear);
  const MinkVector tau = sigma.translation;
  return [ginv, tau, h = std::move(h)](const BallPoint& x) {
    const MinkVector y = ginv * hat(x);
    const double ratio = y[2];
    const double val = ratio * h(BallPoint(y[0] / y[2], y[1] / y[2])) + mink_inner(hat(x), tau);
    if (!std::isfinite(val)) throw DomainError("act_on_ball_function: non-finite value");
    return val;
  };
}

double support_from_points(const std::vector<MinkVector>& points, const BallPoint& x) {
  if (points.empty()) throw std::invalid_argument("support_from_points: empty set");
  const MinkVector xh = hat(x);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : points) best = std::max(best, mink_inner(xh, p));
  return best;
}

double support_from_points(const ConvexSetPoints& set, const BallPoint& x) {
  return support_from_points(set.points, x);
}

MinkVector chi_map(double h_value, const Vec2& g, const BallPoint& x) {
  return {g[0], g[1], x.dot(g) - h_value};
}

Vec2 fd_gradient(const BallFunction& h, const BallPoint& x, double step) {
  Vec2 g;
  const double h0 = h(x);
  for (int k = 0; k < 2; ++k) {
    BallPoint xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    const bool fp = xp.squaredNorm() < 1.0, fm = xm.squaredNorm() < 1.0;
    if (fp && fm) {
      g[k] = (h(xp) - h(xm)) / (2.0 * step);
    } else if (fp) {
      g[k] = (h(xp) - h0) / step;
    } else if (fm) {
      g[k] = (h0 - h(xm)) / step;
    } else {
      throw DomainError("fd_gradient: stencil leaves the ball");
    }
  }
  return g;
}

MinkVector chi_map(const BallFunction& h, const BallPoint& x, double step) {
  return chi_map(h(x), fd_gradient(h, x, step), x);
}

PLFunctionB convexify(const PLFunctionB& h) {
  LowerHull hull(h.grid->nodes(), h.values);
  PLFunctionB out(h.grid, hull.envelope());
  out.convex_flag = ConvexFlag::verified;
  return out;
}

double convexity_defect(const PLFunctionB& h) {
  LowerHull hull(h.grid->nodes(), h.values);
  double worst = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) worst = std::max(worst, h.values[i] - hull.envelope(i));
  return worst;
}

ConvexFlag check_convex(PLFunctionB& h, double tol) {
  double scale = 1.0;
  for (double v : h.values) scale = std::max(scale, std::abs(v));
  h.convex_flag = convexity_defect(h) <= tol * scale ? ConvexFlag::verified : ConvexFlag::failed;
  return h.convex_flag;
}

PLFunctionB convex_envelope_boundary(const BoundaryData& g, GridPtr grid) {
  if (g.size() < 3) throw std::invalid_argument("convex_envelope_boundary: need at least 3 boundary samples");
  g.validate();
  const auto ring = grid->boundary_ring();
  std::vector<Vec2> pts;
  std::vector<double> z;
  for (std::size_t i : ring) {
    pts.push_back(grid->node(i));
    z.push_back(g(grid->angle(i)));
  }
  LowerHull hull(pts, z);
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    values[i] = grid->on_boundary(i) ? g(grid->angle(i)) : hull.evaluate(grid->node(i));
  }
  PLFunctionB out(grid, std::move(values));
  out.convex_flag = ConvexFlag::verified;
  return out;
}

Vec2 GraphFunctionU::center(int i, int j) const {
  const double d = 2.0 * half_width / n;
  return {-half_width + (i + 0.5) * d, -half_width + (j + 0.5) * d};
}

double GraphFunctionU::max_gradient_norm() const {
  const double d = 2.0 * half_width / n;
  double worst = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      const double gx = (values[(i + 1) * n + j] - values[i * n + j]) / d;
      const double gy = (values[i * n + j + 1] - values[i * n + j]) / d;
      worst = std::max(worst, std::hypot(gx, gy));
    }
  return worst;
}

GraphFunctionU legendre(const PLFunctionB& h, int resolution, std::optional<double> half_width) {
  if (resolution < 2) throw std::invalid_argument("legendre: resolution must be >= 2");
  LowerHull hull(h.grid->nodes(), h.values);
  std::vector<int> verts;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (hull.is_vertex(i)) verts.push_back(static_cast<int>(i));
  GraphFunctionU u;
  u.grid = h.grid;
  u.n = resolution;
  if (half_width) {
    u.half_width = *half_width;
  } else {
    double reach = 0.0;
    const auto tris = hull.triangles();
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto& tri = tris[t];
      bool interior = false;
      for (int v : tri) interior = interior || !hull.on_boundary(static_cast<std::size_t>(v));
      if (interior) reach = std::max(reach, hull.gradient(t).cwiseAbs().maxCoeff());
    }
    u.half_width = 1.05 * reach + 1e-6;
  }
  u.values.resize(static_cast<std::size_t>(resolution) * resolution);
  u.argmax.resize(u.values.size());
  const auto& nodes = h.grid->nodes();
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const Vec2 p = u.center(i, j);
      double best = -std::numeric_limits<double>::infinity();
      int arg = -1;
      for (int v : verts) {
        const double val = nodes[v].dot(p) - h.values[v];
        if (val > best) {
          best = val;
          arg = v;
        }
      }
      u.values[i * resolution + j] = best;
      u.argmax[i * resolution + j] = arg;
    }
  return u;
}

PLFunctionB legendre_inverse(const GraphFunctionU& u) {
  const auto& nodes = u.grid->nodes();
  std::vector<double> values(nodes.size());
  const std::size_t m = u.values.size();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < m; ++c) {
      const Vec2 p = u.center(static_cast<int>(c / u.n), static_cast<int>(c % u.n));
      best = std::max(best, nodes[i].dot(p) - u.values[c]);
    }
    values[i] = best;
  }
  return PLFunctionB(u.grid, std::move(values));
}

}  // namespace minkprob
