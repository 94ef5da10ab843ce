#pragma once

// Dirichlet problem MA(h) = μ in B, h = g on the boundary ring, and the
// numerical comparison-principle and Alexandrov–Heinz probes built on it.

#include "minkprob/measure.hpp"

#include <optional>
#include <stdexcept>

namespace minkprob {

struct DirichletOptions {
  double tol = 1e-3;          // relative, see DirichletResult::max_residual
  int max_sweeps = 500;       // monotone height sweeps
  int max_newton = 60;
  int warmup_sweeps = 0;      // monotone sweeps before the Newton phase
  bool newton = true;
  double bisection_tol = 1e-10;
  /// Defaults to the boundary envelope, lowered by a convex bowl when Newton is on.
  std::optional<std::vector<double>> initial;
};

struct DirichletResult {
  PLFunctionB h;
  DiscreteMeasureB ma;
  /// max_i |MA_i - μ_i| / (μ_i + μ̄), μ̄ the mean target mass per interior node.
  double max_residual = 0.0;
  std::vector<double> residual_history;
  int sweeps = 0;
  int newton_steps = 0;
  bool converged = false;
  /// Largest increase of any node during a monotone sweep (0 by construction).
  double monotone_violation = 0.0;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, DirichletResult partial)
      : std::runtime_error(what), result(std::move(partial)) {}
  DirichletResult result;
};

/// Throws std::invalid_argument for invalid μ (negative or on the boundary ring)
/// and NonConvergence when the residual does not reach tol.
DirichletResult solve_dirichlet(const DiscreteMeasureB& mu, const BoundaryData& g, const DirichletOptions& opt = {});

/// Relative residual as used by the solver.
double dirichlet_residual(const DiscreteMeasureB& ma, const DiscreteMeasureB& mu);

struct ComparisonReport {
  bool applicable = true;          // MA(h1) <= MA(h2) nodewise within tolerance
  double boundary_trace_gap = 0.0; // max |h1 - h2| on the boundary ring
  double min_interior = 0.0;       // min of h1 - h2 over interior nodes
  double min_boundary = 0.0;       // min over the boundary ring
  bool boundary_attains_min = false;
};

ComparisonReport comparison_check(const PLFunctionB& h1, const PLFunctionB& h2, double tol = 1e-6);

struct AlexandrovHeinzLevel {
  int rings = 0, angular = 0;
  double h_center = 0.0;
};
struct AlexandrovHeinzReport {
  double c0 = 0.0;
  std::vector<AlexandrovHeinzLevel> levels;
  double c = 0.0;       // -h(0) at the finest level
  double spread = 0.0;  // (max - min)/max of -h(0) over the levels
};

/// Solves MA(h) = c0·(cell areas) with the given boundary data at three
/// refinement levels and reports h(0).
AlexandrovHeinzReport alexandrov_heinz_probe(double c0, const BoundaryData& g,
                                             const std::vector<std::pair<int, int>>& levels = {{12, 24}, {24, 48}, {48, 96}},
                                             double rho_max = 0.995, const DirichletOptions& opt = {});

/// Tent data: 0 at ±e1, rising linearly in |sin θ| with the given height.
BoundaryData tent_boundary(double height, int samples = 96);

}  // namespace minkprob
