#include "minkprob/dirichlet.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace minkprob;

namespace {
BoundaryData trace(const BallFunction& f, double rho, int n) {
  return BoundaryData::from_function([&](double a) { return f(BallPoint(rho * std::cos(a), rho * std::sin(a))); }, n);
}
}  // namespace

TEST_CASE("Dirichlet solver recovers a quadratic from its measure") {
  const auto g = make_grid(24, 48, 0.995);
  const BallFunction f = [](const BallPoint& x) { return 0.5 * (x[0] * x[0] + 4.0 * x[1] * x[1]); };
  const auto exact = PLFunctionB::sample(g, f);
  const auto r = solve_dirichlet(ma_measure(exact), trace(f, 0.995, 48));
  CHECK(r.converged);
  CHECK(r.max_residual <= 1e-3);
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(std::abs(r.h.values[i] - exact.values[i]) < 2e-2);
}

TEST_CASE("zero measure gives the boundary envelope") {
  const auto g = make_grid(12, 48, 0.995);
  const auto b = tent_boundary(0.4, 48);
  const auto r = solve_dirichlet(DiscreteMeasureB::zero(g), b);
  const auto e = convex_envelope_boundary(b, g);
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(r.h.values[i] == doctest::Approx(e.values[i]));
}

TEST_CASE("a Dirac mass at the centre gives a cone") {
  const int n = 48;
  const double rho = 0.995;
  const auto g = make_grid(16, n, rho);
  auto mu = DiscreteMeasureB::zero(g);
  mu.mass[0] = 1.0;
  mu.refresh_total();
  const auto r = solve_dirichlet(mu, BoundaryData::from_function([](double) { return 0.0; }, n));
  // apex depth d: the cell {p : <p, y_j> <= d} has area d² n tan(π/n) / ρ²
  const double depth = rho / std::sqrt(n * std::tan(std::numbers::pi / n));
  CHECK(r.h.values[0] == doctest::Approx(-depth).epsilon(1e-4));
}

TEST_CASE("invalid input and non-convergence") {
  const auto g = make_grid(8, 16, 0.9);
  const auto zero = BoundaryData::from_function([](double) { return 0.0; }, 16);
  auto mu = DiscreteMeasureB::zero(g);
  mu.mass[g->boundary_ring()[0]] = 1.0;
  CHECK_THROWS_AS(solve_dirichlet(mu, zero), std::invalid_argument);

  std::vector<double> m(g->size(), 0.0);
  for (std::size_t i : g->interior_nodes()) m[i] = g->cell_area(i);
  DirichletOptions opt;
  opt.newton = false;
  opt.max_sweeps = 1;
  opt.tol = 1e-12;
  try {
    solve_dirichlet(DiscreteMeasureB(g, m), zero, opt);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(!e.result.converged);
    CHECK(e.result.h.size() == g->size());
  }
}

TEST_CASE("monotone sweeps never raise a node") {
  const auto g = make_grid(10, 24, 0.9);
  std::vector<double> m(g->size(), 0.0);
  for (std::size_t i : g->interior_nodes()) m[i] = 0.5 * g->cell_area(i);
  DirichletOptions opt;
  opt.newton = false;
  opt.max_sweeps = 2000;
  const auto r = solve_dirichlet(DiscreteMeasureB(g, m), BoundaryData::from_function([](double) { return 0.0; }, 24), opt);
  CHECK(r.converged);
  CHECK(r.monotone_violation <= 0.0);
}

TEST_CASE("comparison principle on a solved pair") {
  const auto g = make_grid(16, 32, 0.995);
  const auto b = BoundaryData::from_function([](double a) { return 0.2 * std::cos(a); }, 32);
  std::vector<double> m1(g->size(), 0.0), m2(g->size(), 0.0);
  for (std::size_t i : g->interior_nodes()) {
    m1[i] = 0.5 * g->cell_area(i);
    m2[i] = (1.0 + g->node(i).squaredNorm()) * g->cell_area(i);
  }
  DirichletOptions opt;
  opt.tol = 1e-9;
  const auto h1 = solve_dirichlet(DiscreteMeasureB(g, m1), b, opt).h;
  const auto h2 = solve_dirichlet(DiscreteMeasureB(g, m2), b, opt).h;
  const auto rep = comparison_check(h1, h2);
  CHECK(rep.applicable);
  CHECK(rep.boundary_attains_min);
  CHECK(rep.min_interior >= -1e-9);
}

TEST_CASE("Alexandrov-Heinz probe") {
  const auto zero = BoundaryData::from_function([](double) { return 0.0; }, 48);
  const auto control = alexandrov_heinz_probe(0.0, zero, {{8, 16}, {16, 32}});
  for (const auto& l : control.levels) CHECK(l.h_center == doctest::Approx(0.0));
  const auto probe = alexandrov_heinz_probe(1.0, zero, {{8, 16}, {16, 32}, {24, 48}});
  // μ = Lebesgue is the measure of (|x|² - ρ²)/2, so h(0) ≈ -ρ²/2
  for (const auto& l : probe.levels) CHECK(l.h_center == doctest::Approx(-0.5 * 0.995 * 0.995).epsilon(2e-2));
  CHECK(probe.spread < 0.2);
  CHECK_THROWS_AS(alexandrov_heinz_probe(-1.0, zero), std::invalid_argument);
}
