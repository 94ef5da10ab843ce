#include "minkprob/measure.hpp"

#include "minkprob/lower_hull.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace minkprob {

DiscreteMeasureB::DiscreteMeasureB(GridPtr g, std::vector<double> m) : grid(std::move(g)), mass(std::move(m)) {
  if (mass.size() != grid->size()) throw std::invalid_argument("DiscreteMeasureB: size mismatch");
  refresh_total();
}

DiscreteMeasureB DiscreteMeasureB::zero(GridPtr g) {
  const std::size_t n = g->size();
  return DiscreteMeasureB(std::move(g), std::vector<double>(n, 0.0));
}

void DiscreteMeasureB::refresh_total() {
  total_ = 0.0;
  for (double m : mass) total_ += m;
}

void DiscreteMeasureB::validate() const {
  for (double m : mass)
    if (!(m >= 0.0) || !std::isfinite(m)) throw std::invalid_argument("measure: masses must be finite and >= 0");
}

std::vector<SubdifferentialCell> subdifferential_cells(const PLFunctionB& h, double merge_tol) {
  LowerHull hull(h.grid->nodes(), h.values);
  std::vector<SubdifferentialCell> cells(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    cells[i].node = i;
    if (h.grid->on_boundary(i)) continue;
    cells[i].polygon = hull.subdifferential(i, merge_tol);
    cells[i].area = cells[i].polygon.size() < 3 ? 0.0 : std::abs(signed_area(cells[i].polygon));
  }
  return cells;
}

DiscreteMeasureB ma_measure(const PLFunctionB& h, double merge_tol) {
  if (h.convex_flag == ConvexFlag::failed)
    throw std::invalid_argument("ma_measure: function is not convex; convexify it first");
  const auto cells = subdifferential_cells(h, merge_tol);
  std::vector<double> m(h.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = cells[i].area;
  return DiscreteMeasureB(h.grid, std::move(m));
}

DiscreteMeasureB area_measure(const DiscreteMeasureB& ma) {
  std::vector<double> m(ma.mass.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = lambda(ma.grid->node(i)) * ma.mass[i];
  return DiscreteMeasureB(ma.grid, std::move(m));
}

DiscreteMeasureB area_measure(const PLFunctionB& h, double merge_tol) { return area_measure(ma_measure(h, merge_tol)); }

DiscreteMeasureB euclidean_area_measure(const DiscreteMeasureB& ma) {
  std::vector<double> m(ma.mass.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::sqrt(1.0 + ma.grid->node(i).squaredNorm()) * ma.mass[i];
  return DiscreteMeasureB(ma.grid, std::move(m));
}

GraphAreaResult area_from_graph(const GraphFunctionU& u, const std::vector<bool>& omega) {
  GraphAreaResult r;
  const double cell = u.cell_area();
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    const int i = u.argmax[c];
    if (i < 0 || !omega[static_cast<std::size_t>(i)]) continue;
    const double g2 = u.grid->node(static_cast<std::size_t>(i)).squaredNorm();
    if (g2 >= 1.0) {
      ++r.skipped_cells;
      continue;
    }
    r.area += std::sqrt(1.0 - g2) * cell;
  }
  return r;
}

Eigen::Matrix2d fd_hessian(const BallFunction& h, const BallPoint& x, double step) {
  Eigen::Matrix2d H;
  const double f0 = h(x);
  const Vec2 e[2] = {Vec2(step, 0.0), Vec2(0.0, step)};
  for (int a = 0; a < 2; ++a) H(a, a) = (h(x + e[a]) - 2.0 * f0 + h(x - e[a])) / (step * step);
  H(0, 1) = H(1, 0) = (h(x + e[0] + e[1]) - h(x + e[0] - e[1]) - h(x - e[0] + e[1]) + h(x - e[0] - e[1])) /
                      (4.0 * step * step);
  return H;
}

double hessian_det_density(const HessianFn& hess, const BallPoint& x) { return hess(x).determinant(); }

double hessian_det_density(const BallFunction& h, const BallPoint& x, double step) {
  return fd_hessian(h, x, step).determinant();
}

double mean_radius(const HessianFn& hess, const BallPoint& x) {
  const Eigen::Matrix2d H = hess(x);
  return lambda(x) / 2.0 * (H.trace() - x.dot(H * x));
}

double mean_radius(const BallFunction& h, const BallPoint& x, double step) {
  return mean_radius([&](const BallPoint& y) { return fd_hessian(h, y, step); }, x);
}

MaLawReport ma_law_checks(const PLFunctionB& h, double c, const AffineFn& affine, const PLFunctionB& h2,
                          int subsets, std::mt19937_64& rng) {
  MaLawReport rep;
  const auto base = ma_measure(h);
  PLFunctionB scaled = h, shifted = h, mx = h;
  for (std::size_t i = 0; i < h.size(); ++i) {
    scaled.values[i] = c * h.values[i];
    shifted.values[i] = h.values[i] + affine(h.grid->node(i));
    mx.values[i] = std::max(h.values[i], h2.values[i]);
  }
  const auto ms = ma_measure(scaled), ma = ma_measure(shifted);
  for (std::size_t i = 0; i < h.size(); ++i) {
    rep.scaling_error = std::max(rep.scaling_error, std::abs(ms.mass[i] - c * c * base.mass[i]));
    rep.affine_error = std::max(rep.affine_error, std::abs(ma.mass[i] - base.mass[i]));
  }
  mx.convex_flag = ConvexFlag::unknown;
  const auto mmax = ma_measure(mx), m2 = ma_measure(h2);
  const auto interior = h.grid->interior_nodes();
  std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
  std::uniform_int_distribution<int> len(1, static_cast<int>(std::min<std::size_t>(interior.size(), 400)));
  for (int s = 0; s < subsets; ++s) {
    double a = 0.0, b1 = 0.0, b2 = 0.0;
    const int n = len(rng);
    // half the subsets are random scatters, half are contiguous discs
    if (s % 2 == 0) {
      std::vector<bool> used(h.size(), false);
      for (int k = 0; k < n; ++k) {
        const std::size_t i = interior[pick(rng)];
        if (used[i]) continue;
        used[i] = true;
        a += mmax.mass[i];
        b1 += base.mass[i];
        b2 += m2.mass[i];
      }
    } else {
      const BallPoint centre = h.grid->node(interior[pick(rng)]);
      const double radius = 0.05 + 0.4 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      for (std::size_t i : interior) {
        if ((h.grid->node(i) - centre).norm() > radius) continue;
        a += mmax.mass[i];
        b1 += base.mass[i];
        b2 += m2.mass[i];
      }
    }
    ++rep.max_law_tests;
    const double gap = a - std::min(b1, b2);
    const double slack = 1e-12 * (1.0 + std::max(b1, b2));
    if (gap < -slack) {
      ++rep.max_law_violations;
      rep.worst_max_law_gap = std::min(rep.worst_max_law_gap, gap);
    }
  }
  return rep;
}

void write_measure_csv(std::ostream& out, const DiscreteMeasureB& m) {
  out << "node,x1,x2,mass\n";
  for (std::size_t i = 0; i < m.mass.size(); ++i) {
    out << i << ',' << format_double(m.grid->node(i)[0]) << ',' << format_double(m.grid->node(i)[1]) << ','
        << format_double(m.mass[i]) << '\n';
  }
}

DiscreteMeasureB read_measure_csv(std::istream& in, GridPtr grid) {
  std::vector<double> mass(grid->size(), 0.0);
  for (const auto& r : read_numeric_csv(in, 4)) {
    const long idx = std::lround(r[0]);
    if (idx < 0 || static_cast<std::size_t>(idx) >= grid->size())
      throw std::invalid_argument("measure CSV: node index out of range");
    if ((grid->node(static_cast<std::size_t>(idx)) - BallPoint(r[1], r[2])).norm() > 1e-9)
      throw std::invalid_argument("measure CSV: coordinates do not match the grid");
    mass[static_cast<std::size_t>(idx)] = r[3];
  }
  DiscreteMeasureB m(std::move(grid), std::move(mass));
  m.validate();
  return m;
}

}  // namespace minkprob
