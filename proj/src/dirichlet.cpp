#include "minkprob/dirichlet.hpp"

#include "minkprob/laguerre.hpp"
#include "minkprob/lower_hull.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace minkprob {

namespace {

// Masses of the lower hull restricted to a node subset.
struct SubsetHull {
  std::vector<double> area;  // per subset entry (0 on the hull boundary)
  std::vector<LowerHull::DualEdge> edges;
  std::unique_ptr<LowerHull> hull;
};

SubsetHull subset_hull(const std::vector<Vec2>& pts, const std::vector<double>& heights) {
  SubsetHull out;
  out.hull = std::make_unique<LowerHull>(pts, heights);
  out.area.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out.area[i] = out.hull->subdifferential_area(i);
  out.edges = out.hull->dual_edges();
  return out;
}

double mean_interior_mass(const DiscreteMeasureB& mu) {
  const auto n = mu.grid->interior_nodes().size();
  return n ? mu.total() / static_cast<double>(n) : 0.0;
}

}  // namespace

double dirichlet_residual(const DiscreteMeasureB& ma, const DiscreteMeasureB& mu) {
  const double bar = mean_interior_mass(mu);
  double worst = 0.0;
  for (std::size_t i = 0; i < mu.mass.size(); ++i) {
    if (mu.grid->on_boundary(i)) continue;
    const double denom = mu.mass[i] + bar;
    const double diff = std::abs(ma.mass[i] - mu.mass[i]);
    worst = std::max(worst, denom > 0.0 ? diff / denom : diff);
  }
  return worst;
}

DirichletResult solve_dirichlet(const DiscreteMeasureB& mu, const BoundaryData& g, const DirichletOptions& opt) {
  mu.validate();
  g.validate();
  const GridPtr grid = mu.grid;
  const std::size_t n = grid->size();
  for (std::size_t i : grid->boundary_ring())
    if (mu.mass[i] != 0.0) throw std::invalid_argument("solve_dirichlet: μ carries mass on the boundary ring");

  const PLFunctionB envelope = convex_envelope_boundary(g, grid);
  std::vector<double> h;
  if (opt.initial) {
    if (opt.initial->size() != n) throw std::invalid_argument("solve_dirichlet: initial guess has the wrong size");
    h = *opt.initial;
    for (std::size_t i : grid->boundary_ring())
      if (std::abs(h[i] - envelope.values[i]) > 1e-12 * (1.0 + std::abs(h[i])))
        throw std::invalid_argument("solve_dirichlet: initial guess does not match the boundary data");
  } else {
    h = envelope.values;
    if (opt.newton && mu.total() > 0.0) {
      // strictly convex start: envelope plus a bowl vanishing on the boundary
      // ring, scaled so that its total mass matches μ
      const double rho2 = grid->rho_max() * grid->rho_max();
      double cells = 0.0;
      for (std::size_t i : grid->interior_nodes()) cells += grid->cell_area(i);
      const double s = std::sqrt(mu.total() / cells);
      for (std::size_t i : grid->interior_nodes()) h[i] += 0.5 * s * (grid->node(i).squaredNorm() - rho2);
    }
  }

  DirichletResult res;
  const double bar = mean_interior_mass(mu);

  // Subset: nodes with positive target mass plus the boundary ring.  Nodes of
  // zero target mass end up on facets of this hull.
  std::vector<int> subset;
  std::vector<int> local(n, -1);
  std::vector<int> active;  // subset-local indices of positive-mass nodes
  for (std::size_t i = 0; i < n; ++i) {
    if (grid->on_boundary(i) || mu.mass[i] > 0.0) {
      local[i] = static_cast<int>(subset.size());
      if (!grid->on_boundary(i)) active.push_back(local[i]);
      subset.push_back(static_cast<int>(i));
    }
  }
  std::vector<Vec2> pts(subset.size());
  for (std::size_t s = 0; s < subset.size(); ++s) pts[s] = grid->node(static_cast<std::size_t>(subset[s]));
  std::vector<double> target(subset.size(), 0.0);
  for (int a : active) target[a] = mu.mass[static_cast<std::size_t>(subset[a])];

  auto subset_heights = [&]() {
    std::vector<double> z(subset.size());
    for (std::size_t s = 0; s < subset.size(); ++s) z[s] = h[static_cast<std::size_t>(subset[s])];
    return z;
  };
  auto residual_of = [&](const std::vector<double>& area) {
    double worst = 0.0;
    for (int a : active) worst = std::max(worst, std::abs(area[a] - target[a]) / (target[a] + bar));
    return worst;
  };
  auto l1_of = [&](const std::vector<double>& area) {
    double s = 0.0;
    for (int a : active) s += std::abs(area[a] - target[a]);
    return s;
  };

  // A stencil gives a bounded cell iff its directions leave no angular gap of π.
  auto surrounds = [&](const Vec2& x, const std::vector<int>& st) {
    if (st.size() < 3) return false;
    std::vector<double> ang;
    for (int s : st) ang.push_back(std::atan2(pts[s][1] - x[1], pts[s][0] - x[0]));
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2.0 * std::numbers::pi - ang.back();
    for (std::size_t k = 1; k < ang.size(); ++k) gap = std::max(gap, ang[k] - ang[k - 1]);
    return gap < std::numbers::pi - 1e-9;
  };

  // Local stencils for the monotone sweeps.
  std::vector<std::vector<int>> stencil(subset.size());
  auto build_stencils = [&]() {
    for (int a : active) {
      const std::size_t node = static_cast<std::size_t>(subset[a]);
      std::vector<int> st;
      for (int j : grid->two_ring(node))
        if (local[static_cast<std::size_t>(j)] >= 0) st.push_back(local[static_cast<std::size_t>(j)]);
      if (!surrounds(pts[a], st)) {
        st.clear();
        for (int s = 0; s < static_cast<int>(subset.size()); ++s)
          if (s != a) st.push_back(s);
      }
      stencil[a] = std::move(st);
    }
  };

  auto local_area = [&](int a, double value, std::vector<Vec2>& ys, std::vector<double>& zs) {
    ys.clear();
    zs.clear();
    for (int s : stencil[a]) {
      ys.push_back(pts[s]);
      zs.push_back(h[static_cast<std::size_t>(subset[s])]);
    }
    return laguerre_area(pts[a], value, ys, zs);
  };

  double hscale = 1.0;
  for (double v : h) hscale = std::max(hscale, std::abs(v));

  auto monotone_sweep = [&](const std::vector<double>& area) {
    std::vector<int> order = active;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return (target[x] - area[x]) / (target[x] + bar) > (target[y] - area[y]) / (target[y] + bar);
    });
    std::vector<Vec2> ys;
    std::vector<double> zs;
    for (int a : order) {
      const std::size_t node = static_cast<std::size_t>(subset[a]);
      const double h0 = h[node];
      if (local_area(a, h0, ys, zs) >= target[a]) continue;
      double hi = h0, step = 1e-3 * hscale, lo = h0 - step;
      while (local_area(a, lo, ys, zs) < target[a]) {
        hi = lo;
        step *= 2.0;
        lo = h0 - step;
        if (step > 1e12 * hscale) throw std::runtime_error("solve_dirichlet: bisection bracket diverged");
      }
      const double tol_h = opt.bisection_tol * std::max(1.0, std::abs(h0));
      while (hi - lo > tol_h) {
        const double mid = 0.5 * (lo + hi);
        if (local_area(a, mid, ys, zs) >= target[a]) lo = mid; else hi = mid;
      }
      res.monotone_violation = std::max(res.monotone_violation, lo - h0);
      h[node] = lo;
    }
    ++res.sweeps;
  };

  SubsetHull cur = subset_hull(pts, subset_heights());
  double resid = active.empty() ? 0.0 : residual_of(cur.area);
  res.residual_history.push_back(resid);
  bool newton_phase = false;

  if (!active.empty()) build_stencils();
  {
    bool all_positive = true;
    for (int a : active) all_positive = all_positive && cur.area[a] > 0.0;
    newton_phase = opt.newton && all_positive;
  }
  while (resid > opt.tol && !active.empty()) {
    if (!newton_phase) {
      if (res.sweeps >= opt.max_sweeps) break;
      monotone_sweep(cur.area);
      cur = subset_hull(pts, subset_heights());
      resid = residual_of(cur.area);
      res.residual_history.push_back(resid);
      bool all_positive = true;
      for (int a : active) all_positive = all_positive && cur.area[a] > 0.0;
      if (opt.newton && res.sweeps >= opt.warmup_sweeps && all_positive) newton_phase = true;
      continue;
    }
    if (res.newton_steps >= opt.max_newton) break;

    // Newton step on the active heights: M δ = A - μ with M = -∂A/∂h.
    const int m = static_cast<int>(active.size());
    std::vector<int> row(subset.size(), -1);
    for (int k = 0; k < m; ++k) row[active[k]] = k;
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    for (const auto& e : cur.edges) {
      const double w = e.length / (pts[e.a] - pts[e.b]).norm();
      const int ra = row[e.a], rb = row[e.b];
      if (ra >= 0) diag[ra] += w;
      if (rb >= 0) diag[rb] += w;
      if (ra >= 0 && rb >= 0) {
        trip.emplace_back(ra, rb, -w);
        trip.emplace_back(rb, ra, -w);
      }
    }
    const double dmax = std::max(diag.maxCoeff(), 1e-300);
    for (int k = 0; k < m; ++k) {
      double d = diag[k];
      if (d <= 1e-12 * dmax) d = dmax;
      trip.emplace_back(k, k, d * (1.0 + 1e-12));
    }
    Eigen::SparseMatrix<double> M(m, m);
    M.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd rhs(m);
    for (int k = 0; k < m; ++k) rhs[k] = cur.area[active[k]] - target[active[k]];
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(M);
    if (ldlt.info() != Eigen::Success) throw std::runtime_error("solve_dirichlet: Newton matrix factorization failed");
    const Eigen::VectorXd delta = ldlt.solve(rhs);

    double min_area = std::numeric_limits<double>::infinity(), min_target = min_area;
    for (int a : active) {
      min_area = std::min(min_area, cur.area[a]);
      min_target = std::min(min_target, target[a]);
    }
    const double floor_area = 0.5 * std::min(min_area, min_target);
    const double err0 = l1_of(cur.area);
    const std::vector<double> h_before = h;
    bool accepted = false;
    double alpha = 1.0;
    for (int trial = 0; trial < 30; ++trial, alpha *= 0.5) {
      for (int k = 0; k < m; ++k) h[static_cast<std::size_t>(subset[active[k]])] = h_before[static_cast<std::size_t>(subset[active[k]])] + alpha * delta[k];
      SubsetHull next = subset_hull(pts, subset_heights());
      double mn = std::numeric_limits<double>::infinity();
      for (int a : active) mn = std::min(mn, next.area[a]);
      if (mn >= floor_area && mn > 0.0 && l1_of(next.area) <= (1.0 - 0.5 * alpha) * err0) {
        cur = std::move(next);
        accepted = true;
        break;
      }
    }
    ++res.newton_steps;
    if (!accepted) {
      h = h_before;
      newton_phase = false;  // fall back to monotone sweeps
      build_stencils();
      continue;
    }
    resid = residual_of(cur.area);
    res.residual_history.push_back(resid);
  }

  // Zero-mass interior nodes go onto the hull of the others.
  for (std::size_t i = 0; i < n; ++i) {
    if (local[i] < 0) h[i] = cur.hull->evaluate(grid->node(i));
  }
  res.h = PLFunctionB(grid, h);
  res.h.convex_flag = ConvexFlag::verified;
  res.ma = ma_measure(res.h);
  res.max_residual = dirichlet_residual(res.ma, mu);
  res.converged = res.max_residual <= opt.tol;
  if (!res.converged) {
    throw NonConvergence("solve_dirichlet: residual " + std::to_string(res.max_residual) + " above tolerance " +
                             std::to_string(opt.tol) + " after " + std::to_string(res.sweeps) + " sweeps and " +
                             std::to_string(res.newton_steps) + " Newton steps",
                         res);
  }
  return res;
}

ComparisonReport comparison_check(const PLFunctionB& h1, const PLFunctionB& h2, double tol) {
  ComparisonReport rep;
  const auto m1 = ma_measure(h1), m2 = ma_measure(h2);
  double scale = 0.0;
  for (double v : m2.mass) scale = std::max(scale, v);
  for (std::size_t i = 0; i < h1.size(); ++i)
    if (m1.mass[i] > m2.mass[i] + 1e-6 * (scale + 1e-300) + 1e-15) rep.applicable = false;
  rep.min_interior = std::numeric_limits<double>::infinity();
  rep.min_boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const double d = h1.values[i] - h2.values[i];
    if (h1.grid->on_boundary(i)) {
      rep.min_boundary = std::min(rep.min_boundary, d);
      rep.boundary_trace_gap = std::max(rep.boundary_trace_gap, std::abs(d));
    } else {
      rep.min_interior = std::min(rep.min_interior, d);
    }
  }
  if (rep.boundary_trace_gap > tol) rep.applicable = false;
  rep.boundary_attains_min = rep.min_boundary <= rep.min_interior + tol;
  return rep;
}

BoundaryData tent_boundary(double height, int samples) {
  return BoundaryData::from_function([height](double a) { return height * std::abs(std::sin(a)); }, samples);
}

AlexandrovHeinzReport alexandrov_heinz_probe(double c0, const BoundaryData& g,
                                             const std::vector<std::pair<int, int>>& levels, double rho_max,
                                             const DirichletOptions& opt) {
  if (c0 < 0.0) throw std::invalid_argument("alexandrov_heinz_probe: c0 must be >= 0");
  AlexandrovHeinzReport rep;
  rep.c0 = c0;
  for (const auto& [rings, angular] : levels) {
    auto grid = make_grid(rings, angular, rho_max);
    std::vector<double> m(grid->size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!grid->on_boundary(i)) m[i] = c0 * grid->cell_area(i);
    const auto sol = solve_dirichlet(DiscreteMeasureB(grid, m), g, opt);
    rep.levels.push_back({rings, angular, sol.h.values[0]});
  }
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& l : rep.levels) {
    lo = std::min(lo, -l.h_center);
    hi = std::max(hi, -l.h_center);
  }
  rep.c = -rep.levels.back().h_center;
  rep.spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  return rep;
}

}  // namespace minkprob
