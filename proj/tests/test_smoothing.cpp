#include "minkprob/smoothing.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkprob;

TEST_CASE("geodesic polar coordinates") {
  const MinkVector X = radial_map(BallPoint(0.4, -0.3));
  for (double rho : {0.05, 0.7}) {
    const MinkVector Y = geodesic_polar(X, rho, 1.3);
    CHECK(mink_inner(Y, Y) == doctest::Approx(-1.0));
    CHECK(hyperbolic_distance(X, Y) == doctest::Approx(rho));
  }
}

TEST_CASE("averaging fixes linear functions and scales constants") {
  const MinkVector p(0.2, 0.5, 1.4);
  for (double r : {0.05, 0.1, 0.3}) {
    const auto lin = hyperbolic_average([&](const MinkVector& Y) { return mink_inner(Y, p); }, r);
    const auto cst = hyperbolic_average([](const MinkVector&) { return 1.0; }, r);
    for (const BallPoint& x : {BallPoint(0, 0), BallPoint(0.5, 0.5), BallPoint(-0.9, 0.1)}) {
      const MinkVector X = radial_map(x);
      CHECK(lin(X) == doctest::Approx(mink_inner(X, p)).epsilon(1e-9));
      // disc area 4π sinh²(r/2) times 1/(π sinh² r)
      CHECK(cst(X) == doctest::Approx(2.0 / (std::cosh(r) + 1.0)).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(hyperbolic_average([](const MinkVector&) { return 0.0; }, 0.0), std::invalid_argument);
}

TEST_CASE("support correction on a smooth support function") {
  Patch patch;
  patch.radius = 0.5;
  const auto c = support_correction([](const MinkVector&) { return -1.0; }, 0.1, patch);
  CHECK(c.report.passed);
  CHECK(c.report.attempts == 1);
  CHECK(c.report.C_safety == doctest::Approx(4.0));
}

TEST_CASE("crease: convex correction within the triangle-inequality bound") {
  const MinkVector p1(0.3, 0.0, 1.2), p2(-0.3, 0.1, 1.1);
  const HyperboloidFunction crease = [&](const MinkVector& Y) { return std::max(mink_inner(Y, p1), mink_inner(Y, p2)); };
  Patch patch;
  patch.radius = 0.4;
  double prev = 1e300;
  for (double r : {0.2, 0.1, 0.05}) {
    const auto c = support_correction(crease, r, patch);
    CHECK(c.report.passed);
    CHECK(c.report.convexity_defect <= 1e-10);
    CHECK(c.report.sup_corrected_gap <= c.report.sup_average_gap + c.report.C * r + 1e-12);
    CHECK(c.report.sup_average_gap < prev);
    prev = c.report.sup_average_gap;
  }
}

TEST_CASE("patch convexity test detects concavity") {
  Patch patch;
  const HyperboloidFunction concave = [](const MinkVector& Y) { return -Y[0] * Y[0] / Y[2]; };
  CHECK(patch_convexity_defect(concave, patch) > 1e-6);
  const HyperboloidFunction convex = [](const MinkVector& Y) { return (Y[0] * Y[0] + Y[1] * Y[1]) / Y[2]; };
  CHECK(patch_convexity_defect(convex, patch) <= 1e-12);
}
