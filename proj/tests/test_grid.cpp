#include "minkprob/grid.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace minkprob;

TEST_CASE("polar grid layout and cell areas") {
  const auto g = make_grid(12, 24, 0.9);
  CHECK(g->size() == 1 + 12 * 24);
  CHECK(g->boundary_ring().size() == 24);
  CHECK(g->interior_nodes().size() == 1 + 11 * 24);
  CHECK(g->node(g->index(12, 6)).norm() == doctest::Approx(0.9));
  double eucl = 0.0, hyp = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    eucl += g->cell_area(i);
    hyp += g->hyperbolic_cell_area(i);
  }
  CHECK(eucl == doctest::Approx(std::numbers::pi * 0.81).epsilon(1e-12));
  // Klein disc of Euclidean radius ρ: area 2π(1/√(1-ρ²) - 1)
  CHECK(hyp == doctest::Approx(2.0 * std::numbers::pi * (1.0 / std::sqrt(1.0 - 0.81) - 1.0)).epsilon(1e-10));
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(!g->neighbors(i).empty());
}

TEST_CASE("function CSV round trip is exact") {
  const auto g = make_grid(7, 13, 0.95);
  auto h = PLFunctionB::sample(g, [](const BallPoint& x) { return std::exp(x[0]) - 0.3 * x[1] * x[1] + 1.0 / 3.0; });
  std::stringstream ss;
  write_function_csv(ss, h);
  const auto back = read_function_csv(ss);
  CHECK(*back.grid == *g);
  REQUIRE(back.size() == h.size());
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(back.values[i] == h.values[i]);
}

TEST_CASE("function CSV rejects ragged grids") {
  std::stringstream ss("ring,angle,x1,x2,value\n0,0,0,0,1\n1,0,0.5,0,1\n1,3.14159,-0.5,0,1\n2,0,1,0,1\n");
  CHECK_THROWS_AS(read_function_csv(ss), std::invalid_argument);
}

TEST_CASE("boundary data interpolates periodically and round-trips") {
  const auto b = BoundaryData::from_function([](double a) { return std::cos(a); }, 64);
  CHECK(b(0.0) == doctest::Approx(1.0));
  CHECK(b(2.0 * std::numbers::pi - 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(b(1.0) == doctest::Approx(std::cos(1.0)).epsilon(2e-3));
  std::stringstream ss;
  write_boundary_csv(ss, b);
  const auto back = read_boundary_csv(ss);
  REQUIRE(back.size() == b.size());
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(back.values[i] == b.values[i]);
}

TEST_CASE("format_double keeps full precision") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_double(v)) == v);
}
