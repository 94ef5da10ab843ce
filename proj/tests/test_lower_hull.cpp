#include "minkprob/lower_hull.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using minkprob::LowerHull;
using minkprob::Vec2;

namespace {

// Lower convex envelope at x by brute force over all triangles of nodes
// containing x (Carathéodory).
double brute_envelope(const std::vector<Vec2>& pts, const std::vector<double>& z, const Vec2& x) {
  double best = 1e300;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const double det = minkprob::cross2(pts[b] - pts[a], pts[c] - pts[a]);
        if (std::abs(det) < 1e-14) continue;
        const double l1 = minkprob::cross2(x - pts[a], pts[c] - pts[a]) / det;
        const double l2 = minkprob::cross2(pts[b] - pts[a], x - pts[a]) / det;
        const double l0 = 1.0 - l1 - l2;
        if (l0 < -1e-12 || l1 < -1e-12 || l2 < -1e-12) continue;
        best = std::min(best, l0 * z[a] + l1 * z[b] + l2 * z[c]);
      }
  for (std::size_t a = 0; a < n; ++a)
    if ((pts[a] - x).norm() < 1e-14) best = std::min(best, z[a]);
  return best;
}

}  // namespace

TEST_CASE("lower hull matches brute-force envelope on random data") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec2> pts;
    std::vector<double> z;
    for (int i = 0; i < 28; ++i) {
      pts.emplace_back(u(rng), u(rng));
      z.push_back(trial % 2 ? u(rng) : pts.back().squaredNorm() + 0.2 * u(rng));
    }
    LowerHull hull(pts, z);
    CHECK(hull.max_reflex_defect() < 1e-12);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(hull.envelope(i) == doctest::Approx(brute_envelope(pts, z, pts[i])).epsilon(1e-10));
    }
    for (int k = 0; k < 20; ++k) {
      const Vec2 x(0.3 * u(rng), 0.3 * u(rng));
      double val = 0.0;
      try {
        val = hull.evaluate(x);
      } catch (const std::domain_error&) {
        continue;
      }
      CHECK(val == doctest::Approx(brute_envelope(pts, z, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("quadratic on a square grid: Voronoi subdifferentials") {
  const int n = 21;
  const double d = 0.1;
  std::vector<Vec2> pts;
  std::vector<double> z;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pts.emplace_back(d * (i - n / 2), d * (j - n / 2));
      z.push_back(0.5 * pts.back().squaredNorm());
    }
  LowerHull hull(pts, z);
  double total = 0.0;
  for (int i = 1; i + 1 < n; ++i)
    for (int j = 1; j + 1 < n; ++j) {
      const std::size_t id = static_cast<std::size_t>(i * n + j);
      REQUIRE(hull.is_vertex(id));
      CHECK_FALSE(hull.on_boundary(id));
      const double a = hull.subdifferential_area(id);
      CHECK(a == doctest::Approx(d * d).epsilon(1e-8));
      total += a;
    }
  CHECK(total == doctest::Approx((n - 2) * (n - 2) * d * d).epsilon(1e-9));
  CHECK(hull.on_boundary(0));
  CHECK(hull.subdifferential(0).empty());
}

TEST_CASE("affine data has no interior mass and concave bumps are hidden") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec2> pts;
  std::vector<double> z;
  for (int i = 0; i < 200; ++i) {
    pts.emplace_back(u(rng), u(rng));
    z.push_back(0.3 * pts.back()[0] - 0.7 * pts.back()[1] + 2.0);
  }
  LowerHull flat(pts, z);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(flat.subdifferential_area(i) < 1e-12);
    CHECK(flat.envelope(i) == doctest::Approx(z[i]));
  }
  // lift one interior node upwards: it leaves the hull
  std::size_t inner = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].norm() < pts[inner].norm()) inner = i;
  auto bumped = z;
  bumped[inner] += 1.0;
  LowerHull hb(pts, bumped);
  CHECK_FALSE(hb.is_vertex(inner));
  CHECK(hb.envelope(inner) == doctest::Approx(z[inner]));
}

TEST_CASE("cone over a regular polygon concentrates its mass at the apex") {
  const int m = 64;
  const double s = 0.7;
  std::vector<Vec2> pts{Vec2::Zero()};
  std::vector<double> z{0.0};
  for (int ring = 1; ring <= 3; ++ring)
    for (int k = 0; k < m; ++k) {
      const double a = 2.0 * M_PI * k / m;
      pts.emplace_back(ring * std::cos(a), ring * std::sin(a));
      z.push_back(s * ring);
    }
  LowerHull hull(pts, z);
  CHECK(hull.subdifferential_area(0) == doctest::Approx(m * s * s * std::tan(M_PI / m)).epsilon(1e-10));
  for (std::size_t i = 1; i <= 2 * m; ++i) CHECK(hull.subdifferential_area(i) < 1e-12);
}
