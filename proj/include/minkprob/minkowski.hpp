#pragma once

// Minkowski space R^{2,1}: bilinear form, hyperboloid/ball coordinates and
// affine isometries.  The time-like axis is the last coordinate.

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace minkprob {

using MinkVector = Eigen::Vector3d;
using BallPoint = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

/// Raised when an argument lies outside the domain of an operation
/// (outside the ball, not future time-like, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Global numeric tolerances shared by the group-theoretic checks.
struct Tolerances {
  double matrix = 1e-8;   // relator / isometry checks
  double dedup = 1e-9;    // orbit deduplication
};

inline double mink_inner(const MinkVector& x, const MinkVector& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

/// J = diag(1, 1, -1).
inline Mat3 mink_metric() {
  Mat3 j = Mat3::Identity();
  j(2, 2) = -1.0;
  return j;
}

/// x̂ = (x, 1).
inline MinkVector hat(const BallPoint& x) { return {x[0], x[1], 1.0}; }

/// λ(x) = sqrt(1 - |x|^2); zero on the unit circle.
double lambda(const BallPoint& x);

/// Radial map B -> H^2, x ↦ x̂ / λ(x).
MinkVector radial_map(const BallPoint& x);

/// Inverse radial map: (x, z) ↦ x / z.  Accepts any future time-like vector.
BallPoint radial_inverse(const MinkVector& p);

/// Hyperbolic distance between two points of H^2.
double hyperbolic_distance(const MinkVector& p, const MinkVector& q);

/// Euclidean rotation about the time axis.
Mat3 rotation(double angle);

/// Boost of the given rapidity along the direction (cos angle, sin angle).
Mat3 boost(double rapidity, double angle = 0.0);

/// Affine isometry X ↦ linear·X + translation.
struct Isometry {
  Mat3 linear = Mat3::Identity();
  MinkVector translation = MinkVector::Zero();

  static Isometry identity() { return {}; }
  static Isometry pure_translation(const MinkVector& t) {
    return {Mat3::Identity(), t};
  }

  MinkVector apply(const MinkVector& x) const { return linear * x + translation; }

  /// (this ∘ other)(X) = this(other(X)).
  Isometry compose(const Isometry& other) const {
    return {linear * other.linear, linear * other.translation + translation};
  }

  /// Inverse; for Lorentz matrices γ^{-1} = J γ^T J.
  Isometry inverse() const;

  /// Checks γ^T J γ = J, det γ = 1 and γ_{33} > 0 within the tolerance.
  bool is_future_lorentz(double tol = 1e-8) const;
};

/// Projective action γ̄ of a future Lorentz matrix on the closed ball.
BallPoint projective_action(const Mat3& linear, const BallPoint& x);

/// Linear Lorentz inverse J γ^T J.
Mat3 lorentz_inverse(const Mat3& g);

}  // namespace minkprob
