#pragma once

// The equivariant problem on a closed hyperbolic surface: support functions
// of Γ_τ-invariant convex sets stored at the classes of a quotient mesh,
// the invariant boundary trace g_τ, covolume, L_μ and the solver.

#include "minkprob/fundamental.hpp"
#include "minkprob/grid.hpp"
#include "minkprob/lower_hull.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minkprob {

struct EquivariantOptions {
  int mesh_subdivisions = 16;
  int polygon_depth = 2;
  int orbit_depth = 6;
  MinkVector seed = MinkVector(0.0, 0.0, 3.0);
  int trace_samples = 2048;
  double stencil_factor = 2.2;  // stencil radius in units of the longest mesh edge
  int quad_order = 8;
};

struct StencilEntry {
  int rep;
  MinkVector Y;    // lifted node on the hyperboloid, Y = g X_rep
  BallPoint y;
  MinkVector tau;  // translation part of g
};

class EquivariantDomain {
 public:
  static std::shared_ptr<const EquivariantDomain> build(const Lattice& lattice, const Cocycle& cocycle,
                                                        const EquivariantOptions& opt = {});

  Lattice lattice;
  Cocycle cocycle;
  EquivariantOptions options;
  FundamentalPolygon polygon;
  QuotientMesh mesh;

  std::size_t size() const { return rep_x.size(); }
  std::vector<BallPoint> rep_x;
  std::vector<MinkVector> rep_X;
  std::vector<double> rep_lambda;
  std::vector<MinkVector> node_tau;  // translation of each mesh node's word
  std::vector<std::vector<StencilEntry>> stencils;
  std::vector<double> cell_areas;    // hyperbolic Voronoi cells; they tile the surface

  // Invariant boundary trace and h_τ.
  BoundaryData g_tau;
  std::vector<double> trace_gaps;    // sup |g^(d) - g^(d-1)| for d = 1..orbit_depth
  std::vector<double> hbar_tau;      // h̄_τ at the representatives

  /// Convex envelope of g_τ on the unit disc (the ball support of Ω_τ).
  double h_tau_ball(const BallPoint& x) const;
  bool fuchsian() const { return fuchsian_; }

 private:
  std::shared_ptr<const LowerHull> trace_hull_;
  bool fuchsian_ = false;
};

using DomainPtr = std::shared_ptr<const EquivariantDomain>;

/// τ-equivariant support function, stored as h̄ = H restricted to the
/// hyperboloid at each class representative.
struct EquivariantSupport {
  DomainPtr domain;
  std::vector<double> hbar;

  static EquivariantSupport constant(DomainPtr d, double value);
  static EquivariantSupport h_tau(DomainPtr d);

  /// h̄ at a mesh node (any lift in the fundamental polygon).
  double node_hbar(std::size_t node) const;
  /// Ball value at an arbitrary point: reduce into the polygon, interpolate
  /// on the mesh, transport back.
  double evaluate(const BallPoint& x) const;
  /// h̄ at a point of the hyperboloid.
  double evaluate_hyperboloid(const MinkVector& X) const;
  BallFunction ball_function() const;
};

struct InvariantMeasure {
  DomainPtr domain;
  std::vector<double> mass;  // per representative

  double total() const;
  void validate() const;
  /// t^2 times the hyperbolic cell areas (the measure of h̄ = -t).
  static InvariantMeasure constant_curvature(DomainPtr d, double t);
};

/// A-masses λ_i · |Laguerre cell| at every representative.
std::vector<double> area_masses(const EquivariantSupport& h);
double total_area(const EquivariantSupport& h);

/// Largest height of a node above the lower hull of its lifted stencil
/// (<= 0 when the glued nodal data is convex).
double local_convexity_defect(const EquivariantSupport& h);

std::pair<double, double> tmin_tmax(const EquivariantSupport& h);

/// ∫_0^1 Σ (h̄_τ - h̄) A(h̄_t) dt by Gauss–Legendre in t.  Throws DomainError
/// when h̄ > h̄_τ somewhere.
double covolume(const EquivariantSupport& h, int quad_order = 8);
/// -(1/3) Σ h̄ A(h̄); only for τ = 0.
double covol_fuchsian(const EquivariantSupport& h);
double L_mu(const EquivariantSupport& h, const InvariantMeasure& mu, int quad_order = 8);

/// Σ (h̄_0 - h̄_1) A(h̄_k) for k = 0, 1: the two sides of the sandwich
/// inequality for covol(h_1) - covol(h_0).
std::pair<double, double> sandwich_bounds(const EquivariantSupport& h0, const EquivariantSupport& h1);

struct MonotonicityReport {
  double area0 = 0.0, area1 = 0.0;
  bool nested = false;  // h̄_1 <= h̄_0 everywhere
  bool ok(double tol) const { return !nested || area0 <= area1 + tol; }
};
MonotonicityReport monotonicity_check(const EquivariantSupport& h0, const EquivariantSupport& h1);

struct EquivariantSolveOptions {
  double tol = 1e-6;
  int max_newton = 60;
  double clamp = 1e-9;  // keeps h̄ <= h̄_τ - clamp during iteration
  std::optional<std::vector<double>> initial;
};

struct EquivariantResult {
  EquivariantSupport h;
  std::vector<double> area;
  double max_residual = 0.0;
  std::vector<double> residual_history;
  int newton_steps = 0;
  bool converged = false;
  bool touches_h_tau = false;
  double L_initial = 0.0, L_final = 0.0;
};

class EquivariantNonConvergence : public std::runtime_error {
 public:
  EquivariantNonConvergence(const std::string& what, EquivariantResult partial)
      : std::runtime_error(what), result(std::move(partial)) {}
  EquivariantResult result;
};

/// Damped Newton iteration on A(h̄) = μ over the quotient.  Masses must be
/// positive at every representative.
EquivariantResult solve_equivariant(const InvariantMeasure& mu, const EquivariantSolveOptions& opt = {});

/// Smooth τ-equivariant function Σ_γ φ_γ(X) ⟨X, γ_τ p⟩ built from a
/// Γ-equivariant Gaussian partition of unity of width sigma.
std::function<double(const MinkVector&)> smooth_equivariant(DomainPtr d, const MinkVector& p, double sigma = 0.7);

/// Γ-invariant sum of Gaussian bumps exp(-d(X, γc)^2 / σ^2) over the orbit
/// of each centre, evaluated at the representatives.
std::vector<double> invariant_bumps(const EquivariantDomain& d, const std::vector<BallPoint>& centres,
                                    const std::vector<double>& weights, double sigma);
/// Same field at an arbitrary hyperboloid point.
double invariant_bumps_at(const EquivariantDomain& d, const std::vector<BallPoint>& centres,
                          const std::vector<double>& weights, double sigma, const MinkVector& X);

}  // namespace minkprob
