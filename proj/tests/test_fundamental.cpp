#include "minkprob/fundamental.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace minkprob;

namespace {
const FundamentalPolygon& octagon() {
  static const FundamentalPolygon poly = FundamentalPolygon::dirichlet(genus2_lattice());
  return poly;
}
}  // namespace

TEST_CASE("Dirichlet polygon of the genus-2 lattice is the regular octagon") {
  const auto& poly = octagon();
  REQUIRE(poly.size() == 8);
  // regular n-gon with interior angle α: cosh R = cot(π/n) cot(α/2)
  const double c = 1.0 / std::tan(std::numbers::pi / 8.0);
  const double klein = std::tanh(std::acosh(c * c));
  for (const auto& v : poly.vertices()) CHECK(v.norm() == doctest::Approx(klein).epsilon(1e-10));
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& a = poly.vertices()[(k + 7) % 8];
    const auto& b = poly.vertices()[k];
    const auto& cc = poly.vertices()[(k + 1) % 8];
    CHECK(hyperbolic_angle(a, b, cc) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-10));
  }
  CHECK(poly.area() == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-10));
  CHECK(poly.pairing_defect() < 1e-10);
  for (std::size_t k = 0; k < 8; ++k) {
    const int q = poly.sides()[k].partner;
    REQUIRE(q >= 0);
    CHECK(poly.sides()[static_cast<std::size_t>(q)].partner == static_cast<int>(k));
  }
}

TEST_CASE("too shallow a word depth is rejected") {
  CHECK_THROWS_AS(FundamentalPolygon::dirichlet(genus2_lattice(), 0), DomainError);
}

TEST_CASE("small polygon areas are Euclidean to leading order") {
  const std::vector<BallPoint> tri = {BallPoint(0, 0), BallPoint(1e-3, 0), BallPoint(0, 1e-3)};
  CHECK(hyperbolic_polygon_area(tri) == doctest::Approx(0.5e-6).epsilon(1e-5));
}

TEST_CASE("reduction lands in the polygon and is undone by its word") {
  const auto& poly = octagon();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (int n = 0; n < 300; ++n) {
    const BallPoint x(u(rng), u(rng));
    if (x.norm() > 0.999) continue;
    const auto red = poly.reduce(x);
    CHECK(poly.contains(red.point, 1e-9));
    const BallPoint back = projective_action(red.linear, red.point);
    CHECK((back - x).norm() < 1e-8);
  }
}

TEST_CASE("quotient mesh identifies paired sides consistently") {
  const auto mesh = QuotientMesh::build(octagon(), 6);
  CHECK(mesh.triangles.size() == 8u * 36u);
  CHECK(mesh.max_edge > 0.0);
  for (const auto& nd : mesh.nodes) {
    const auto& rep = mesh.nodes[static_cast<std::size_t>(mesh.reps[static_cast<std::size_t>(nd.rep)])];
    const MinkVector y = nd.linear * rep.X;
    CHECK((y - nd.X).norm() < 1e-10 * nd.X.norm());
    CHECK(mink_inner(nd.X, nd.X) == doctest::Approx(-1.0));
  }
  // Euler characteristic of the closed surface: V - E + F = -2
  std::set<std::pair<int, int>> edges;
  std::set<int> classes;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = mesh.nodes[static_cast<std::size_t>(t[k])].rep, b = mesh.nodes[static_cast<std::size_t>(t[(k + 1) % 3])].rep;
      classes.insert(a);
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  CHECK(static_cast<long>(classes.size()) - static_cast<long>(edges.size()) + static_cast<long>(mesh.triangles.size()) == -2);
  CHECK(classes.size() == mesh.reps.size());
}

TEST_CASE("point location returns reproducing barycentrics") {
  const auto mesh = QuotientMesh::build(octagon(), 6);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.98, 0.98);
  int found = 0;
  for (int n = 0; n < 400; ++n) {
    const BallPoint x(u(rng), u(rng));
    if (!octagon().contains(x)) continue;
    const auto hit = mesh.locate(x);
    REQUIRE(hit.has_value());
    BallPoint y = BallPoint::Zero();
    for (int k = 0; k < 3; ++k) {
      CHECK(hit->bary[k] >= -1e-9);
      y += hit->bary[k] * mesh.nodes[static_cast<std::size_t>(hit->nodes[k])].x;
    }
    CHECK((y - x).norm() < 1e-10);
    ++found;
  }
  CHECK(found > 50);
}
