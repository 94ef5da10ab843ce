#include "minkprob/convex_fn.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkprob;

namespace {
const MinkVector p(0.3, -0.2, 1.5);
double linear(const BallPoint& x) { return mink_inner(hat(x), p); }
}  // namespace

TEST_CASE("extension and restriction of a ball function") {
  const BallFunction h = [](const BallPoint& x) { return x.squaredNorm() - 1.0; };
  const MinkVector X(0.2, 0.1, 1.3);
  CHECK(homog_extension(h, 2.5 * X) == doctest::Approx(2.5 * homog_extension(h, X)));
  CHECK(homog_extension(linear, X) == doctest::Approx(mink_inner(X, p)));
  CHECK_THROWS_AS(homog_extension(h, MinkVector(2.0, 0.0, 1.0)), DomainError);
  const BallPoint x(0.3, 0.4);
  CHECK(hyperbolic_restriction(h, x) == doctest::Approx(h(x) / std::sqrt(1.0 - 0.25)));
}

TEST_CASE("support of a point set and the chi map") {
  const BallPoint x(-0.4, 0.25);
  CHECK(support_from_points({p}, x) == doctest::Approx(linear(x)));
  const MinkVector q(0.0, 0.0, 0.2);
  CHECK(support_from_points({p, q}, x) == doctest::Approx(std::max(linear(x), mink_inner(hat(x), q))));
  const MinkVector c = chi_map(linear, x);
  for (int k = 0; k < 3; ++k) CHECK(c[k] == doctest::Approx(p[k]).epsilon(1e-8));
}

TEST_CASE("translation acts by adding a linear function") {
  Isometry s;
  s.translation = MinkVector(0.1, 0.2, -0.3);
  const BallFunction h = [](const BallPoint& x) { return 0.5 * x.squaredNorm(); };
  const auto th = act_on_ball_function(s, h);
  const BallPoint x(0.2, -0.6);
  CHECK(th(x) == doctest::Approx(h(x) + mink_inner(hat(x), s.translation)));
}

TEST_CASE("convexify returns the greatest convex minorant") {
  const auto g = make_grid(10, 20, 0.9);
  auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return std::sin(4.0 * x[0]) + x[1] * x[1]; });
  const auto c = convexify(h);
  CHECK(convexity_defect(c) <= 1e-12);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(c.values[i] <= h.values[i] + 1e-12);
  CHECK(check_convex(h) == ConvexFlag::failed);
  auto q = PLFunctionB::sample(g, [](const BallPoint& x) { return x.squaredNorm(); });
  CHECK(check_convex(q) == ConvexFlag::verified);
  const auto cq = convexify(q);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(cq.values[i] == doctest::Approx(q.values[i]));
}

TEST_CASE("boundary envelope reproduces affine data and constants") {
  const auto g = make_grid(8, 32, 0.9);
  const auto b = BoundaryData::from_function(
      [](double a) { return 0.9 * (0.5 * std::cos(a) - 0.25 * std::sin(a)) + 0.1; }, 32);
  const auto e = convex_envelope_boundary(b, g);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const BallPoint x = g->node(i);
    CHECK(e.values[i] == doctest::Approx(0.5 * x[0] - 0.25 * x[1] + 0.1).epsilon(1e-10));
  }
}

TEST_CASE("Legendre transform of the half squared norm") {
  const auto g = make_grid(24, 96, 0.95);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return 0.5 * x.squaredNorm(); });
  const auto u = legendre(h, 64);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) {
      const Vec2 c = u.center(i, j);
      if (c.norm() > 0.8) continue;
      // max over nodes of <x,p> - |x|²/2 sits below |p|²/2 by at most half the squared node gap
      const double v = u.values[static_cast<std::size_t>(i) * u.n + j];
      CHECK(v <= 0.5 * c.squaredNorm() + 1e-12);
      CHECK(v >= 0.5 * c.squaredNorm() - 2e-3);
    }
  const auto back = legendre_inverse(u);
  for (std::size_t i : g->interior_nodes()) CHECK(back.values[i] <= h.values[i] + 1e-12);
}
