#pragma once

// Convex functions on the ball and their dual pictures: the 1-homogeneous
// extension H, the hyperbolic restriction h̄, supports of point sets, the χ
// map, convex envelopes and the Legendre–Fenchel transform of the graph
// function.

#include "minkprob/grid.hpp"

#include <optional>

namespace minkprob {

/// H(x, z) = z h(x/z) for future time-like X.
double homog_extension(const BallFunction& h, const MinkVector& X);

/// h̄(v(x)) = h(x)/λ(x).
double hyperbolic_restriction(const BallFunction& h, const BallPoint& x);

/// The action of an affine isometry σ = (γ, τ) on ball functions:
/// x ↦ (λ(x)/λ(γ̄⁻¹x)) h(γ̄⁻¹x) + ⟨x̂, τ⟩.  The ratio equals (γ⁻¹x̂)_3 and is
/// finite up to the boundary circle.
BallFunction act_on_ball_function(const Isometry& sigma, BallFunction h);

/// Finite point sample of an F-convex set.
struct ConvexSetPoints {
  std::vector<MinkVector> points;
};

double support_from_points(const ConvexSetPoints& set, const BallPoint& x);
double support_from_points(const std::vector<MinkVector>& points, const BallPoint& x);

/// χ(x) = grad h + (⟨x, grad h⟩ - h(x)) e_3.
MinkVector chi_map(double h_value, const Vec2& gradient, const BallPoint& x);
/// Central differences with the given step (one-sided when x ± step leaves the ball).
MinkVector chi_map(const BallFunction& h, const BallPoint& x, double step = 1e-5);
Vec2 fd_gradient(const BallFunction& h, const BallPoint& x, double step = 1e-5);

/// Greatest convex minorant on the grid nodes (lower hull of the lifted nodes).
PLFunctionB convexify(const PLFunctionB& h);

/// Largest amount by which a node sits above the lower hull, and the flag it
/// implies at the given relative tolerance.
double convexity_defect(const PLFunctionB& h);
ConvexFlag check_convex(PLFunctionB& h, double tol = 1e-9);

/// Convex envelope of boundary data imposed on the boundary ring: lower hull of
/// the lifted ring nodes (ρ_max ℓ_j, g(ℓ_j)), evaluated at every node.
PLFunctionB convex_envelope_boundary(const BoundaryData& g, GridPtr grid);

/// Graph function ũ on a square cell-centred grid over [-half_width, half_width]².
struct GraphFunctionU {
  double half_width = 0.0;
  int n = 0;
  std::vector<double> values;   // row-major, values[i*n + j] at p = centre(i, j)
  std::vector<int> argmax;      // maximizing node, i.e. grad ũ = x_argmax
  GridPtr grid;

  Vec2 center(int i, int j) const;
  double cell_area() const { return (2.0 * half_width / n) * (2.0 * half_width / n); }
  /// Largest discrete gradient norm over neighbouring cells.
  double max_gradient_norm() const;
};

/// ũ(p) = max_i ⟨x_i, p⟩ - h_i.  The default box covers every subdifferential
/// of an interior hull vertex.
GraphFunctionU legendre(const PLFunctionB& h, int resolution = 256, std::optional<double> half_width = {});

/// h(x_i) ≈ max_p ⟨x_i, p⟩ - ũ(p) over the graph grid (never above h for
/// convex h; below it by at most the resolution times the radius).
PLFunctionB legendre_inverse(const GraphFunctionU& u);

}  // namespace minkprob
