#include "minkprob/measure.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace minkprob;

TEST_CASE("affine functions carry no Monge-Ampere mass") {
  const auto g = make_grid(12, 24, 0.9);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return 0.3 + 0.5 * x[0] - 0.2 * x[1]; });
  const auto m = ma_measure(h);
  for (double v : m.mass) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("a cone puts all its mass at the apex") {
  const int n = 32;
  const auto g = make_grid(10, n, 0.9);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return x.norm(); });
  const auto m = ma_measure(h);
  // subdifferential at the apex: the n-gon circumscribed about the unit circle
  CHECK(m.mass[0] == doctest::Approx(n * std::tan(std::numbers::pi / n)).epsilon(1e-9));
  for (std::size_t i = 1; i < g->size(); ++i) CHECK(std::abs(m.mass[i]) < 1e-9);
}

TEST_CASE("MA of the half squared norm approaches the cell areas") {
  const auto g = make_grid(64, 96, 0.9);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return 0.5 * x.squaredNorm(); });
  const auto m = ma_measure(h);
  CHECK(m.total() == doctest::Approx(std::numbers::pi * 0.81).epsilon(2e-2));
  const auto a = area_measure(h);
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(a.mass[i] == doctest::Approx(lambda(g->node(i)) * m.mass[i]));
  const auto e = euclidean_area_measure(m);
  for (std::size_t i = 0; i < g->size(); ++i)
    CHECK(e.mass[i] == doctest::Approx(std::sqrt(1.0 + g->node(i).squaredNorm()) * m.mass[i]));
}

TEST_CASE("Hessian densities against closed forms") {
  const BallFunction q = [](const BallPoint& x) { return 0.5 * (x[0] * x[0] + 4.0 * x[1] * x[1]); };
  const BallPoint x(0.3, -0.2);
  CHECK(hessian_det_density(q, x) == doctest::Approx(4.0).epsilon(1e-5));
  const BallFunction r = [](const BallPoint& y) { return 0.5 * y.squaredNorm(); };
  // (λ/2)(tr H - H(x,x)) with H = I
  CHECK(mean_radius(r, x) == doctest::Approx(0.5 * lambda(x) * (2.0 - x.squaredNorm())).epsilon(1e-5));
}

TEST_CASE("transformation laws and the max law") {
  const auto g = make_grid(16, 32, 0.9);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return 0.5 * x.squaredNorm() + 0.1 * x[0]; });
  const auto h2 = PLFunctionB::sample(g, [](const BallPoint& x) { return x[0] * x[0] + 0.2 * x[1] * x[1] - 0.1; });
  std::mt19937_64 rng(5);
  const auto rep = ma_law_checks(h, 3.0, AffineFn{Vec2(0.4, -0.7), 0.25}, h2, 30, rng);
  CHECK(rep.scaling_error < 1e-10);
  CHECK(rep.affine_error < 1e-10);
  CHECK(rep.max_law_tests == 30);
  CHECK(rep.max_law_violations == 0);
}

TEST_CASE("graph-side area agrees with the area measure") {
  const auto g = make_grid(24, 48, 0.95);
  const auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return 0.5 * x.squaredNorm() + 0.2 * x[1]; });
  std::vector<bool> omega(g->size(), false);
  for (std::size_t i : g->interior_nodes()) omega[i] = true;
  const auto ga = area_from_graph(legendre(h, 256), omega);
  CHECK(ga.skipped_cells == 0);
  CHECK(ga.area == doctest::Approx(area_measure(h).total()).epsilon(2e-2));
}

TEST_CASE("measure validation and CSV round trip") {
  const auto g = make_grid(6, 12, 0.9);
  auto bad = PLFunctionB::sample(g, [](const BallPoint& x) { return -x.squaredNorm(); });
  check_convex(bad);
  CHECK_THROWS_AS(ma_measure(bad), std::invalid_argument);
  std::vector<double> neg(g->size(), 0.0);
  neg[3] = -1.0;
  CHECK_THROWS_AS(DiscreteMeasureB(g, neg).validate(), std::invalid_argument);
  const auto m = ma_measure(PLFunctionB::sample(g, [](const BallPoint& x) { return x.squaredNorm(); }));
  std::stringstream ss;
  write_measure_csv(ss, m);
  const auto back = read_measure_csv(ss, g);
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(back.mass[i] == m.mass[i]);
}
