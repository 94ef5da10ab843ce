#pragma once

// Discrete Monge–Ampère and area measures of PL convex functions on the polar
// grid, the graph-side area oracle, Hessian densities and the MA laws.

#include "minkprob/convex_fn.hpp"

#include <random>

namespace minkprob {

struct DiscreteMeasureB {
  GridPtr grid;
  std::vector<double> mass;

  DiscreteMeasureB() = default;
  DiscreteMeasureB(GridPtr g, std::vector<double> m);
  static DiscreteMeasureB zero(GridPtr g);

  double total() const { return total_; }
  double operator[](std::size_t i) const { return mass[i]; }
  void validate() const;
  void refresh_total();

 private:
  double total_ = 0.0;
};

struct SubdifferentialCell {
  std::size_t node = 0;
  std::vector<Vec2> polygon;  // ccw
  double area = 0.0;
};

/// Subdifferential polygons of all interior nodes (boundary ring: empty cells).
std::vector<SubdifferentialCell> subdifferential_cells(const PLFunctionB& h, double merge_tol = 1e-9);

/// Throws std::invalid_argument when h is flagged non-convex.
DiscreteMeasureB ma_measure(const PLFunctionB& h, double merge_tol = 1e-9);
/// A(h) = λ MA(h).
DiscreteMeasureB area_measure(const PLFunctionB& h, double merge_tol = 1e-9);
DiscreteMeasureB area_measure(const DiscreteMeasureB& ma);
/// A^e(h) = √(1+|x|²) MA(h).
DiscreteMeasureB euclidean_area_measure(const DiscreteMeasureB& ma);

/// ∫ √(1 - |grad ũ|²) over graph cells whose gradient (the maximizing node)
/// lies in ω.  Cells with |grad ũ| >= 1 are skipped and counted.
struct GraphAreaResult {
  double area = 0.0;
  std::size_t skipped_cells = 0;
};
GraphAreaResult area_from_graph(const GraphFunctionU& u, const std::vector<bool>& omega);

/// det Hess h(x) by central differences (step 1e-4) or from an analytic Hessian.
using HessianFn = std::function<Eigen::Matrix2d(const BallPoint&)>;
Eigen::Matrix2d fd_hessian(const BallFunction& h, const BallPoint& x, double step = 1e-4);
double hessian_det_density(const BallFunction& h, const BallPoint& x, double step = 1e-4);
double hessian_det_density(const HessianFn& hess, const BallPoint& x);

/// (λ(x)/d)(tr Hess h - Hess h(x, x)).
double mean_radius(const BallFunction& h, const BallPoint& x, double step = 1e-4);
double mean_radius(const HessianFn& hess, const BallPoint& x);

struct MaLawReport {
  double scaling_error = 0.0;   // max_i |MA(c h)_i - c² MA(h)_i|
  double affine_error = 0.0;    // max_i |MA(h + A)_i - MA(h)_i|
  std::size_t max_law_tests = 0;
  std::size_t max_law_violations = 0;
  double worst_max_law_gap = 0.0;  // most negative MA(max)(ω) - min(...)
  bool ok(double tol = 1e-9) const {
    return scaling_error <= tol && affine_error <= tol && max_law_violations == 0;
  }
};

/// Affine function x ↦ ⟨x, q⟩ + b.
struct AffineFn {
  Vec2 q = Vec2::Zero();
  double b = 0.0;
  double operator()(const BallPoint& x) const { return x.dot(q) + b; }
};

/// Checks MA(ch) = c² MA(h), MA(h + A) = MA(h) nodewise and the max-law
/// inequality for (h, h2) on `subsets` random node subsets ω.
MaLawReport ma_law_checks(const PLFunctionB& h, double c, const AffineFn& affine, const PLFunctionB& h2,
                          int subsets, std::mt19937_64& rng);

/// CSV: node,x1,x2,mass
void write_measure_csv(std::ostream& out, const DiscreteMeasureB& m);
DiscreteMeasureB read_measure_csv(std::istream& in, GridPtr grid);

}  // namespace minkprob
