#include "minkprob/equivariant.hpp"

#include "minkprob/laguerre.hpp"
#include "minkprob/quadrature.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>

namespace minkprob {

namespace {

using Key = std::pair<long long, long long>;
Key point_key(const BallPoint& x) { return {std::llround(x[0] * 1e10), std::llround(x[1] * 1e10)}; }

BallPoint to_ball(const MinkVector& p) { return {p[0] / p[2], p[1] / p[2]}; }

// Elements whose image of the basepoint lies within `radius`, found by walking
// across polygon sides.
std::vector<GroupElement> elements_within(const Lattice& lattice, const Cocycle& cocycle,
                                          const FundamentalPolygon& poly, double radius) {
  const MinkVector base = radial_map(poly.basepoint());
  std::vector<Isometry> side_iso;
  for (const auto& s : poly.sides()) side_iso.push_back(affine_word(lattice, cocycle, s.word));
  std::vector<GroupElement> out{{{}, Isometry::identity()}};
  std::map<Key, int> seen{{point_key(poly.basepoint()), 0}};
  const double limit = std::cosh(radius);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < side_iso.size(); ++k) {
      GroupElement e{out[i].word, out[i].isometry.compose(side_iso[k])};
      const MinkVector c = e.isometry.linear * base;
      if (-mink_inner(c, base) > limit) continue;
      if (!seen.emplace(point_key(to_ball(c)), 1).second) continue;
      const Word& w = poly.sides()[k].word;
      e.word.insert(e.word.end(), w.begin(), w.end());
      out.push_back(std::move(e));
    }
  }
  return out;
}

double circumradius(const FundamentalPolygon& poly) {
  const MinkVector base = radial_map(poly.basepoint());
  double r = 0.0;
  for (const auto& v : poly.vertices()) r = std::max(r, hyperbolic_distance(base, radial_map(v)));
  return r;
}

bool surrounds(const BallPoint& x, const std::vector<StencilEntry>& st) {
  if (st.size() < 3) return false;
  std::vector<double> ang;
  for (const auto& s : st) ang.push_back(std::atan2(s.y[1] - x[1], s.y[0] - x[0]));
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + 2.0 * std::numbers::pi - ang.back();
  for (std::size_t k = 1; k < ang.size(); ++k) gap = std::max(gap, ang[k] - ang[k - 1]);
  return gap < std::numbers::pi - 1e-9;
}

double lifted_hbar(const std::vector<double>& hbar, const StencilEntry& s) {
  return hbar[static_cast<std::size_t>(s.rep)] + mink_inner(s.Y, s.tau);
}

struct CellData {
  std::vector<double> area;
  std::vector<Eigen::Triplet<double>> jac;  // ∂A_i/∂h̄_j
};

CellData compute_cells(const EquivariantDomain& d, const std::vector<double>& hbar, bool jacobian) {
  const std::size_t n = d.size();
  CellData out;
  out.area.assign(n, 0.0);
  std::vector<Vec2> ys;
  std::vector<double> zs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& st = d.stencils[i];
    ys.clear();
    zs.clear();
    for (const auto& s : st) {
      ys.push_back(s.y);
      zs.push_back(lifted_hbar(hbar, s) / s.Y[2]);
    }
    const double li = d.rep_lambda[i];
    const double hi = hbar[i] * li;
    if (!jacobian) {
      out.area[i] = li * laguerre_area(d.rep_x[i], hi, ys, zs);
      continue;
    }
    const LaguerreCell cell = laguerre_cell(d.rep_x[i], hi, ys, zs);
    out.area[i] = li * cell.area;
    double diag = 0.0;
    for (std::size_t k = 0; k < st.size(); ++k) {
      const double len = cell.facet_length(static_cast<int>(k));
      if (len <= 0.0) continue;
      const double w = len / (st[k].y - d.rep_x[i]).norm();
      out.jac.emplace_back(static_cast<int>(i), st[k].rep, li * w / st[k].Y[2]);
      diag += w;
    }
    out.jac.emplace_back(static_cast<int>(i), static_cast<int>(i), -li * li * diag);
  }
  return out;
}

// Orbit points shadowing the geodesic ray from the origin to ℓ.  The ray is
// followed in the frame of the current tile, so ⟨ℓ̂, γ_τ p⟩ is accumulated
// from terms of size e^{-D} instead of being formed from huge entries.
double ray_trace(const EquivariantDomain& d, const MinkVector& ell, const MinkVector& seed) {
  const auto& sides = d.polygon.sides();
  const MinkVector base = radial_map(d.polygon.basepoint());
  std::vector<MinkVector> normal, side_tau;
  std::vector<Mat3> side_inv;
  for (const auto& s : sides) {
    normal.push_back(base - s.linear * base);
    side_inv.push_back(lorentz_inverse(s.linear));
    side_tau.push_back(cocycle_extend(d.lattice, d.cocycle, s.word));
  }
  MinkVector B(0.0, 0.0, 1.0), T(ell[0], ell[1], 0.0);
  double dist = 0.0, acc = 0.0;
  auto reduce = [&]() {
    for (int guard = 0; guard < 64; ++guard) {
      std::size_t worst = 0;
      double v = 0.0;
      for (std::size_t k = 0; k < sides.size(); ++k) {
        const double s = -mink_inner(B, normal[k]) / normal[k].norm();
        if (s > v) {
          v = s;
          worst = k;
        }
      }
      if (v <= 1e-14) return;
      // g -> g s_k:  τ gains g τ_{s_k}, seen through g^{-1} ℓ̂ = e^{-D}(B + T).
      acc += std::exp(-dist) * mink_inner(B + T, side_tau[worst]);
      B = side_inv[worst] * B;
      T = side_inv[worst] * T;
    }
  };
  reduce();
  double best = std::exp(-dist) * mink_inner(B + T, seed) + acc;
  const double step = 0.25;
  for (int it = 0; it < 96; ++it) {
    const MinkVector nb = std::cosh(step) * B + std::sinh(step) * T;
    T = std::sinh(step) * B + std::cosh(step) * T;
    B = nb / std::sqrt(-mink_inner(nb, nb));
    T += mink_inner(T, B) * B;
    T /= std::sqrt(mink_inner(T, T));
    dist += step;
    reduce();
    best = std::max(best, std::exp(-dist) * mink_inner(B + T, seed) + acc);
  }
  return best;
}

void require_same_domain(const EquivariantSupport& a, const EquivariantSupport& b) {
  if (a.domain != b.domain) throw std::invalid_argument("support functions live on different domains");
}

}  // namespace

std::shared_ptr<const EquivariantDomain> EquivariantDomain::build(const Lattice& lattice, const Cocycle& cocycle,
                                                                  const EquivariantOptions& opt) {
  lattice.validate();
  validate_cocycle(lattice, cocycle);
  if (opt.orbit_depth < 1) throw std::invalid_argument("orbit depth must be at least 1");
  if (opt.trace_samples < 16) throw std::invalid_argument("too few boundary trace samples");
  auto d = std::make_shared<EquivariantDomain>();
  d->lattice = lattice;
  d->cocycle = cocycle;
  d->options = opt;
  d->polygon = FundamentalPolygon::dirichlet(lattice, opt.polygon_depth);
  d->mesh = QuotientMesh::build(d->polygon, opt.mesh_subdivisions);
  d->fuchsian_ = cocycle.max_norm() <= 1e-14;

  const auto& nodes = d->mesh.nodes;
  for (const auto& q : nodes) d->node_tau.push_back(cocycle_extend(lattice, cocycle, q.word));
  for (int r : d->mesh.reps) {
    const auto& q = nodes[static_cast<std::size_t>(r)];
    d->rep_x.push_back(q.x);
    d->rep_X.push_back(q.X);
    d->rep_lambda.push_back(lambda(q.x));
  }

  // Lifted stencils.
  const double rf = circumradius(d->polygon);
  const double rst = opt.stencil_factor * d->mesh.max_edge;
  const auto tiles = elements_within(lattice, cocycle, d->polygon, 2.0 * rf + rst + 1e-6);
  const MinkVector base = radial_map(d->polygon.basepoint());
  std::vector<MinkVector> tile_centre;
  for (const auto& t : tiles) tile_centre.push_back(t.isometry.linear * base);
  const double near_tile = std::cosh(rf + rst + 1e-6), near_node = std::cosh(rst);
  d->stencils.resize(d->size());
  for (std::size_t i = 0; i < d->size(); ++i) {
    const MinkVector& Xi = d->rep_X[i];
    std::map<Key, int> seen{{point_key(d->rep_x[i]), -1}};
    auto& st = d->stencils[i];
    for (std::size_t t = 0; t < tiles.size(); ++t) {
      if (-mink_inner(tile_centre[t], Xi) > near_tile) continue;
      const Isometry& g = tiles[t].isometry;
      for (std::size_t nd = 0; nd < nodes.size(); ++nd) {
        const MinkVector Y = g.linear * nodes[nd].X;
        if (-mink_inner(Y, Xi) > near_node) continue;
        const BallPoint y = to_ball(Y);
        if (!seen.emplace(point_key(y), 1).second) continue;
        st.push_back({nodes[nd].rep, Y, y, g.translation + g.linear * d->node_tau[nd]});
      }
    }
    if (!surrounds(d->rep_x[i], st)) {
      throw DomainError("lifted stencil of node " + std::to_string(i) + " is one-sided; raise stencil_factor");
    }
  }

  // Hyperbolic Voronoi cells of the representatives.
  for (std::size_t i = 0; i < d->size(); ++i) {
    ConvexPolygon cell = ConvexPolygon::circumscribed(1.0, 64, -1);
    const MinkVector& Xi = d->rep_X[i];
    for (std::size_t k = 0; k < d->stencils[i].size(); ++k) {
      const MinkVector w = Xi - d->stencils[i][k].Y;
      cell.clip(BallPoint(-w[0], -w[1]), -w[2], static_cast<int>(k));
    }
    if (cell.empty() || cell.has_label(-1)) throw DomainError("Voronoi cell not closed by the stencil");
    d->cell_areas.push_back(hyperbolic_polygon_area(cell.points));
  }

  // Boundary trace of the orbit hull, level by level.
  const auto elements = enumerate_elements(lattice, cocycle, opt.orbit_depth);
  const auto ns = static_cast<std::size_t>(opt.trace_samples);
  const auto levels = static_cast<std::size_t>(opt.orbit_depth) + 1;
  std::vector<double> best(ns * levels, -std::numeric_limits<double>::infinity());
  std::vector<MinkVector> ell(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(ns);
    ell[s] = MinkVector(std::cos(a), std::sin(a), 1.0);
  }
  for (const auto& e : elements) {
    const MinkVector p = e.isometry.apply(opt.seed);
    const std::size_t lv = e.word.size();
    for (std::size_t s = 0; s < ns; ++s) {
      best[s * levels + lv] = std::max(best[s * levels + lv], mink_inner(ell[s], p));
    }
  }
  d->g_tau.angles.resize(ns);
  d->g_tau.values.resize(ns);
  d->trace_gaps.assign(levels - 1, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    double run = best[s * levels];
    for (std::size_t lv = 1; lv < levels; ++lv) {
      const double next = std::max(run, best[s * levels + lv]);
      d->trace_gaps[lv - 1] = std::max(d->trace_gaps[lv - 1], next - run);
      run = next;
    }
    d->g_tau.angles[s] = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(ns);
    d->g_tau.values[s] = std::max(run, ray_trace(*d, ell[s], opt.seed));
  }
  std::vector<Vec2> circle(ns);
  for (std::size_t s = 0; s < ns; ++s) circle[s] = Vec2(ell[s][0], ell[s][1]);
  d->trace_hull_ = std::make_shared<LowerHull>(circle, d->g_tau.values);
  for (std::size_t i = 0; i < d->size(); ++i) {
    d->hbar_tau.push_back(d->h_tau_ball(d->rep_x[i]) / d->rep_lambda[i]);
  }
  return d;
}

double EquivariantDomain::h_tau_ball(const BallPoint& x) const { return trace_hull_->evaluate(x); }

EquivariantSupport EquivariantSupport::constant(DomainPtr d, double value) {
  const std::size_t n = d->size();
  return {std::move(d), std::vector<double>(n, value)};
}

EquivariantSupport EquivariantSupport::h_tau(DomainPtr d) {
  std::vector<double> v = d->hbar_tau;
  return {std::move(d), std::move(v)};
}

double EquivariantSupport::node_hbar(std::size_t node) const {
  const auto& q = domain->mesh.nodes[node];
  return hbar[static_cast<std::size_t>(q.rep)] + mink_inner(q.X, domain->node_tau[node]);
}

double EquivariantSupport::evaluate(const BallPoint& x) const {
  const EquivariantDomain& d = *domain;
  const Reduction r = d.polygon.reduce(x);
  const auto hit = d.mesh.locate(r.point);
  if (!hit) throw DomainError("evaluate: reduced point outside the mesh");
  double hf = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto nd = static_cast<std::size_t>(hit->nodes[static_cast<std::size_t>(k)]);
    hf += hit->bary[static_cast<std::size_t>(k)] * node_hbar(nd) / d.mesh.nodes[nd].X[2];
  }
  if (r.word.empty()) return hf;
  // H(g Z) = H(Z) + <g Z, τ_g> with Z = x̂_F, and g Z = (g Z)_3 x̂.
  const MinkVector gz = r.linear * hat(r.point);
  const MinkVector tau = cocycle_extend(d.lattice, d.cocycle, r.word);
  return (hf + mink_inner(gz, tau)) / gz[2];
}

double EquivariantSupport::evaluate_hyperboloid(const MinkVector& X) const {
  return evaluate(to_ball(X)) * X[2];
}

BallFunction EquivariantSupport::ball_function() const {
  EquivariantSupport copy = *this;
  return [copy](const BallPoint& x) { return copy.evaluate(x); };
}

double InvariantMeasure::total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

void InvariantMeasure::validate() const {
  if (!domain) throw std::invalid_argument("measure has no domain");
  if (mass.size() != domain->size()) throw std::invalid_argument("measure size does not match the quotient mesh");
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!std::isfinite(mass[i]) || mass[i] < 0.0) {
      throw std::invalid_argument("measure mass at node " + std::to_string(i) + " is negative or not finite");
    }
  }
}

InvariantMeasure InvariantMeasure::constant_curvature(DomainPtr d, double t) {
  std::vector<double> m = d->cell_areas;
  for (double& v : m) v *= t * t;
  return {std::move(d), std::move(m)};
}

std::vector<double> area_masses(const EquivariantSupport& h) {
  return compute_cells(*h.domain, h.hbar, false).area;
}

double total_area(const EquivariantSupport& h) {
  const auto a = area_masses(h);
  return std::accumulate(a.begin(), a.end(), 0.0);
}

double local_convexity_defect(const EquivariantSupport& h) {
  const EquivariantDomain& d = *h.domain;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Vec2> ys;
    std::vector<double> zs;
    for (const auto& s : d.stencils[i]) {
      ys.push_back(s.y);
      zs.push_back(lifted_hbar(h.hbar, s) / s.Y[2]);
    }
    const LowerHull hull(ys, zs);
    worst = std::max(worst, h.hbar[i] * d.rep_lambda[i] - hull.evaluate(d.rep_x[i]));
  }
  return worst;
}

std::pair<double, double> tmin_tmax(const EquivariantSupport& h) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < h.hbar.size(); ++i) {
    const double v = h.domain->hbar_tau[i] - h.hbar[i];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

double covolume(const EquivariantSupport& h, int quad_order) {
  const EquivariantDomain& d = *h.domain;
  const std::size_t n = d.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = d.hbar_tau[i] - h.hbar[i];
    if (diff[i] < -1e-12 * std::max(1.0, std::abs(h.hbar[i]))) {
      throw DomainError("covolume: h̄ exceeds h̄_τ at node " + std::to_string(i));
    }
  }
  const auto [ts, ws] = gauss_legendre(quad_order, 0.0, 1.0);
  double total = 0.0;
  std::vector<double> blend(n);
  for (std::size_t q = 0; q < ts.size(); ++q) {
    for (std::size_t i = 0; i < n; ++i) blend[i] = d.hbar_tau[i] - ts[q] * diff[i];
    const auto a = compute_cells(d, blend, false).area;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += diff[i] * a[i];
    total += ws[q] * s;
  }
  return total;
}

double covol_fuchsian(const EquivariantSupport& h) {
  if (!h.domain->fuchsian()) throw DomainError("covol_fuchsian applies only to the zero cocycle");
  const auto a = area_masses(h);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (h.hbar[i] > 1e-12) throw DomainError("covol_fuchsian: h̄ must be non-positive");
    s += h.hbar[i] * a[i];
  }
  return -s / 3.0;
}

double L_mu(const EquivariantSupport& h, const InvariantMeasure& mu, int quad_order) {
  if (mu.domain != h.domain) throw std::invalid_argument("measure and support live on different domains");
  double lin = 0.0;
  for (std::size_t i = 0; i < h.hbar.size(); ++i) lin += (h.domain->hbar_tau[i] - h.hbar[i]) * mu.mass[i];
  return covolume(h, quad_order) - lin;
}

std::pair<double, double> sandwich_bounds(const EquivariantSupport& h0, const EquivariantSupport& h1) {
  require_same_domain(h0, h1);
  const auto a0 = area_masses(h0), a1 = area_masses(h1);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < a0.size(); ++i) {
    const double d = h0.hbar[i] - h1.hbar[i];
    lo += d * a0[i];
    hi += d * a1[i];
  }
  return {lo, hi};
}

MonotonicityReport monotonicity_check(const EquivariantSupport& h0, const EquivariantSupport& h1) {
  require_same_domain(h0, h1);
  MonotonicityReport r;
  r.area0 = total_area(h0);
  r.area1 = total_area(h1);
  r.nested = true;
  for (std::size_t i = 0; i < h0.hbar.size(); ++i) r.nested = r.nested && h1.hbar[i] <= h0.hbar[i];
  return r;
}

EquivariantResult solve_equivariant(const InvariantMeasure& mu, const EquivariantSolveOptions& opt) {
  mu.validate();
  const DomainPtr dom = mu.domain;
  const EquivariantDomain& d = *dom;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mu.mass[i] > 0.0)) {
      throw std::invalid_argument("solve_equivariant needs a positive mass at every node (node " +
                                  std::to_string(i) + ")");
    }
  }
  const double total = mu.total();
  const double bar = total / static_cast<double>(n);
  double area_f = 0.0;
  for (double a : d.cell_areas) area_f += a;

  EquivariantResult res;
  res.h.domain = dom;
  if (opt.initial) {
    if (opt.initial->size() != n) throw std::invalid_argument("initial guess has the wrong size");
    res.h.hbar = *opt.initial;
  } else {
    const double s = std::sqrt(total / area_f);
    res.h.hbar.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.h.hbar[i] = d.hbar_tau[i] - s;
  }
  auto clamp = [&](std::vector<double>& hb) {
    for (std::size_t i = 0; i < n; ++i) hb[i] = std::min(hb[i], d.hbar_tau[i] - opt.clamp);
  };
  clamp(res.h.hbar);
  res.L_initial = L_mu(res.h, mu);

  auto residual = [&](const std::vector<double>& a) {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(a[i] - mu.mass[i]) / (mu.mass[i] + bar));
    return r;
  };
  auto l1 = [&](const std::vector<double>& a) {
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e += std::abs(a[i] - mu.mass[i]);
    return e;
  };
  const double mu_min = *std::min_element(mu.mass.begin(), mu.mass.end());

  CellData cells = compute_cells(d, res.h.hbar, true);
  for (int it = 0;; ++it) {
    res.max_residual = residual(cells.area);
    res.residual_history.push_back(res.max_residual);
    if (res.max_residual <= opt.tol) {
      res.converged = true;
      break;
    }
    if (it >= opt.max_newton) break;
    Eigen::SparseMatrix<double> jac(static_cast<int>(n), static_cast<int>(n));
    jac.setFromTriplets(cells.jac.begin(), cells.jac.end());
    Eigen::VectorXd rhs(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) rhs[static_cast<int>(i)] = mu.mass[i] - cells.area[i];
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(jac);
    if (lu.info() != Eigen::Success) break;
    const Eigen::VectorXd delta = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !delta.allFinite()) break;

    const double err0 = l1(cells.area);
    const double floor_area = 0.5 * std::min(*std::min_element(cells.area.begin(), cells.area.end()), mu_min);
    bool accepted = false;
    for (double alpha = 1.0; alpha > 1e-6; alpha *= 0.5) {
      std::vector<double> trial = res.h.hbar;
      for (std::size_t i = 0; i < n; ++i) trial[i] += alpha * delta[static_cast<int>(i)];
      clamp(trial);
      CellData c = compute_cells(d, trial, true);
      if (*std::min_element(c.area.begin(), c.area.end()) < floor_area) continue;
      if (l1(c.area) > (1.0 - 0.5 * alpha) * err0) continue;
      res.h.hbar = std::move(trial);
      cells = std::move(c);
      accepted = true;
      break;
    }
    ++res.newton_steps;
    if (!accepted) break;
  }
  res.area = cells.area;
  for (std::size_t i = 0; i < n; ++i) {
    res.touches_h_tau = res.touches_h_tau || res.h.hbar[i] > d.hbar_tau[i] - 10.0 * opt.clamp;
  }
  res.L_final = L_mu(res.h, mu);
  if (!res.converged) {
    throw EquivariantNonConvergence("equivariant solver stopped at residual " + std::to_string(res.max_residual),
                                    std::move(res));
  }
  return res;
}

namespace {

double bump_field(const std::vector<GroupElement>& elems, const std::vector<MinkVector>& centres,
                  const std::vector<double>& weights, double sigma, const MinkVector& X) {
  double s = 0.0;
  for (const auto& e : elems) {
    for (std::size_t k = 0; k < centres.size(); ++k) {
      const double dist = hyperbolic_distance(e.isometry.linear * centres[k], X);
      if (dist < 6.0 * sigma) s += weights[k] * std::exp(-(dist * dist) / (sigma * sigma));
    }
  }
  return s;
}

std::vector<GroupElement> bump_elements(const EquivariantDomain& d, double sigma) {
  return elements_within(d.lattice, Cocycle::zero(d.lattice.rank()), d.polygon,
                         2.0 * circumradius(d.polygon) + 6.0 * sigma);
}

std::vector<MinkVector> bump_centres(const EquivariantDomain& d, const std::vector<BallPoint>& centres) {
  std::vector<MinkVector> out;
  for (const auto& c : centres) out.push_back(radial_map(d.polygon.reduce(c).point));
  return out;
}

}  // namespace

std::vector<double> invariant_bumps(const EquivariantDomain& d, const std::vector<BallPoint>& centres,
                                    const std::vector<double>& weights, double sigma) {
  if (centres.size() != weights.size() || !(sigma > 0.0)) throw std::invalid_argument("invalid bump parameters");
  const auto elems = bump_elements(d, sigma);
  const auto cs = bump_centres(d, centres);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = bump_field(elems, cs, weights, sigma, d.rep_X[i]);
  return out;
}

double invariant_bumps_at(const EquivariantDomain& d, const std::vector<BallPoint>& centres,
                          const std::vector<double>& weights, double sigma, const MinkVector& X) {
  if (centres.size() != weights.size() || !(sigma > 0.0)) throw std::invalid_argument("invalid bump parameters");
  const auto elems = bump_elements(d, sigma);
  const auto cs = bump_centres(d, centres);
  const Reduction r = d.polygon.reduce(to_ball(X));
  return bump_field(elems, cs, weights, sigma, radial_map(r.point));
}

}  // namespace minkprob

namespace minkprob {

std::function<double(const MinkVector&)> smooth_equivariant(DomainPtr d, const MinkVector& p, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("partition width must be positive");
  auto elems = std::make_shared<std::vector<GroupElement>>(
      elements_within(d->lattice, d->cocycle, d->polygon, circumradius(d->polygon) + 6.0 * sigma));
  const MinkVector base = radial_map(d->polygon.basepoint());
  return [d, elems, p, sigma, base](const MinkVector& X) {
    const Reduction r = d->polygon.reduce(to_ball(X));
    const MinkVector XF = radial_map(r.point);
    double num = 0.0, den = 0.0;
    for (const auto& e : *elems) {
      const double dist = hyperbolic_distance(e.isometry.linear * base, XF);
      if (dist > 6.0 * sigma) continue;
      const double w = std::exp(-(dist * dist) / (sigma * sigma));
      num += w * mink_inner(XF, e.isometry.apply(p));
      den += w;
    }
    double v = num / den;
    if (!r.word.empty()) {
      // back to X = g X_F
      const MinkVector tau = cocycle_extend(d->lattice, d->cocycle, r.word);
      v += mink_inner(X, tau);
    }
    return v;
  };
}

}  // namespace minkprob
