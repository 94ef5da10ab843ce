#pragma once

// Hyperbolic averaging of functions on H^2 over geodesic discs,
//   ĥ_r(x) = A(r) ∫_{B(x,r)} h̄ dH,   A(r) = 1 / (π sinh² r),
// which fixes restrictions of linear functions, and the support-function
// correction ĥ_r - C r.

#include "minkprob/minkowski.hpp"

#include <functional>
#include <vector>

namespace minkprob {

using HyperboloidFunction = std::function<double(const MinkVector&)>;

struct AverageQuadrature {
  int radial = 16;   // Gauss–Legendre in the geodesic radius
  int angular = 32;  // trapezoid in the angle
};

/// Throws std::invalid_argument when r <= 0 and std::runtime_error when the
/// quadrature fails the linear fixed-point self-test (1e-6).
HyperboloidFunction hyperbolic_average(HyperboloidFunction h, double r, AverageQuadrature q = {});

/// Point at geodesic polar coordinates (rho, theta) around X.
MinkVector geodesic_polar(const MinkVector& X, double rho, double theta);

/// Disc of Klein radius `radius` around `centre`, sampled on a polar grid.
struct Patch {
  BallPoint centre = BallPoint::Zero();
  double radius = 0.3;
  int rings = 8;
  int angular = 24;
  std::vector<BallPoint> points() const;
};

struct CorrectionReport {
  double C_safety = 0.0;
  double lipschitz = 0.0;
  double C = 0.0;
  double convexity_defect = 0.0;   // <= tolerance when the ball function is convex on the patch
  double sup_average_gap = 0.0;    // sup |h̄ - ĥ_r| on the patch
  double sup_corrected_gap = 0.0;  // sup |h̄ - (ĥ_r - C r)|
  int attempts = 0;
  bool passed = false;
};

struct CorrectedFunction {
  HyperboloidFunction function;
  CorrectionReport report;
};

/// ĥ_r - C r with C = C_safety · Lip(h̄ on the r-neighbourhood of the patch).
/// C_safety doubles up to three times if the lifted-hull test fails; throws
/// std::runtime_error when it still fails.
CorrectedFunction support_correction(HyperboloidFunction h, double r, const Patch& patch, double C_safety = 4.0,
                                     AverageQuadrature q = {}, double convex_tol = 1e-10);

/// Largest height of a patch node above the lower hull of the others' lifted
/// ball values (<= 0 for convex data).
double patch_convexity_defect(const HyperboloidFunction& h, const Patch& patch);

}  // namespace minkprob
