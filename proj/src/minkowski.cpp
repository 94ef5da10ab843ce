#include "minkprob/minkowski.hpp"

#include <cmath>

namespace minkprob {

double lambda(const BallPoint& x) {
  const double n2 = x.squaredNorm();
  if (n2 > 1.0 + 1e-14) {
    throw DomainError("lambda: point outside the closed unit ball");
  }
  return std::sqrt(std::max(0.0, 1.0 - n2));
}

MinkVector radial_map(const BallPoint& x) {
  const double l = lambda(x);
  if (l <= 0.0) {
    throw DomainError("radial_map: boundary point has no image on the hyperboloid");
  }
  return hat(x) / l;
}

BallPoint radial_inverse(const MinkVector& p) {
  if (!(p[2] > 0.0) || mink_inner(p, p) >= 0.0) {
    throw DomainError("radial_inverse: vector is not future time-like");
  }
  return {p[0] / p[2], p[1] / p[2]};
}

double hyperbolic_distance(const MinkVector& p, const MinkVector& q) {
  return std::acosh(std::max(1.0, -mink_inner(p, q)));
}

Mat3 rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Mat3 boost(double rapidity, double angle) {
  const double c = std::cosh(rapidity), s = std::sinh(rapidity);
  Mat3 b;
  b << c, 0, s, 0, 1, 0, s, 0, c;
  if (angle == 0.0) return b;
  return rotation(angle) * b * rotation(-angle);
}

Mat3 lorentz_inverse(const Mat3& g) {
  const Mat3 j = mink_metric();
  return j * g.transpose() * j;
}

Isometry Isometry::inverse() const {
  const Mat3 inv = lorentz_inverse(linear);
  return {inv, -(inv * translation)};
}

bool Isometry::is_future_lorentz(double tol) const {
  const Mat3 j = mink_metric();
  const double err = (linear.transpose() * j * linear - j).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, linear.cwiseAbs().maxCoeff());
  return err <= tol * scale * scale && std::abs(linear.determinant() - 1.0) <= tol * scale &&
         linear(2, 2) > 0.0;
}

BallPoint projective_action(const Mat3& linear, const BallPoint& x) {
  const MinkVector y = linear * hat(x);
  return {y[0] / y[2], y[1] / y[2]};
}

}  // namespace minkprob
