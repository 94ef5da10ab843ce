#include "minkprob/pogorelov.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkprob;

TEST_CASE("Pogorelov function values and invariants") {
  const PogorelovFn f(3, 2, 1.0);
  CHECK(f.alpha() == doctest::Approx(4.0 / 3.0));
  CHECK(f(Eigen::Vector3d(0.0, 0.5, 0.0)) == doctest::Approx(std::pow(0.5, 4.0 / 3.0)));
  CHECK(f(Eigen::Vector3d(0.7, 0.0, 0.0)) == 0.0);
  CHECK(f(Eigen::Vector3d(0.2, 0.3, 0.1)) < PogorelovFn(3, 2, 2.0)(Eigen::Vector3d(0.2, 0.3, 0.1)));
  CHECK_THROWS_AS(PogorelovFn(2, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PogorelovFn(3, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PogorelovFn(3, 2, 0.5), std::invalid_argument);
}

TEST_CASE("finite-difference Hessian against the closed form") {
  // f = β r^α (1 + β t²), t = |x1|, r = |(x2, x3)|, α = 4/3
  const double beta = 1.0, a = 4.0 / 3.0;
  const Eigen::Vector3d x(0.1, 0.3, 0.2);
  const double t = x[0], r = std::hypot(x[1], x[2]);
  const double s = 1.0 + beta * t * t;
  const double exact = a * beta * std::pow(r, 3.0 * a - 4.0) * s * 2.0 * a * beta * beta * beta *
                       ((a - 1.0) * s - 2.0 * a * beta * t * t);
  CHECK(fd_hessian_det(PogorelovFn(3, 2, beta), x) == doctest::Approx(exact).epsilon(1e-4));
}

TEST_CASE("quasi-random points avoid the flat tube and repeat") {
  const auto a = halton_ball_points(3, 2, 500, 1e-3);
  const auto b = halton_ball_points(3, 2, 500, 1e-3);
  REQUIRE(a.size() == 500);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].norm() < 1.0);
    CHECK(std::hypot(a[i][1], a[i][2]) >= 1e-3);
    CHECK((a[i] - b[i]).norm() == 0.0);
  }
}

TEST_CASE("beta search: rescaled form is convex, literal form is not") {
  const auto good = search_beta(3, 2, PogorelovForm::rescaled, 0.0, 20000);
  CHECK(good.found);
  CHECK(good.beta == 8.0);
  for (const auto& s : good.scans)
    if (s.beta == good.beta) {
      CHECK(s.min_det > 0.0);
      CHECK(s.negative == 0);
      CHECK(s.max_on_segment <= 1e-12);
    }
  const auto bad = search_beta(3, 2, PogorelovForm::literal, 0.0, 20000);
  CHECK(!bad.found);
  for (const auto& s : bad.scans) CHECK(s.min_det < 0.0);
}

TEST_CASE("C1 across the flat set") {
  const auto c1 = c1_check(PogorelovFn(3, 2, 8.0, PogorelovForm::rescaled));
  REQUIRE(c1.radial_derivative.size() == 3);
  CHECK(c1.radial_derivative[1] < c1.radial_derivative[0]);
  CHECK(c1.radial_derivative[2] < c1.radial_derivative[1]);
}
