#include "minkprob/minkowski.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkprob;

TEST_CASE("radial map lands on the hyperboloid") {
  const BallPoint x(0.3, -0.5);
  const MinkVector v = radial_map(x);
  CHECK(mink_inner(v, v) == doctest::Approx(-1.0));
  CHECK((radial_inverse(v) - x).norm() < 1e-14);
  CHECK(lambda(x) == doctest::Approx(std::sqrt(1.0 - 0.34)));
  CHECK_THROWS_AS(radial_map(BallPoint(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(radial_inverse(MinkVector(1.0, 0.0, 0.5)), DomainError);
  CHECK_THROWS_AS(lambda(BallPoint(1.1, 0.0)), DomainError);
}

TEST_CASE("boosts are future Lorentz and move points by their rapidity") {
  const Mat3 g = boost(0.8, 0.4) * rotation(1.1);
  Isometry iso{g, MinkVector(0.1, 0.2, 0.3)};
  CHECK(iso.is_future_lorentz());
  const Isometry id = iso.compose(iso.inverse());
  CHECK((id.linear - Mat3::Identity()).norm() < 1e-12);
  CHECK(id.translation.norm() < 1e-12);
  const MinkVector o(0, 0, 1);
  CHECK(hyperbolic_distance(o, boost(0.8, 0.4) * o) == doctest::Approx(0.8));
  Isometry bad{Mat3::Identity() * 2.0, MinkVector::Zero()};
  CHECK_FALSE(bad.is_future_lorentz());
}

TEST_CASE("projective action agrees with the linear action on the hyperboloid") {
  const Mat3 g = boost(1.3, -0.7);
  const BallPoint x(0.2, 0.6);
  const BallPoint y = projective_action(g, x);
  CHECK((radial_map(y) - g * radial_map(x)).norm() < 1e-12);
  CHECK((lorentz_inverse(g) * g - Mat3::Identity()).norm() < 1e-12);
}
