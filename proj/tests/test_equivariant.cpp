#include "minkprob/convex_fn.hpp"
#include "minkprob/equivariant.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace minkprob;

namespace {

constexpr double pi = std::numbers::pi;
const MinkVector t0(0.1, -0.05, 0.02);

DomainPtr fuchsian() {
  static const DomainPtr d = EquivariantDomain::build(genus2_lattice(), Cocycle::zero(4));
  return d;
}

DomainPtr coboundary() {
  static const DomainPtr d = [] {
    const Lattice lat = genus2_lattice();
    return EquivariantDomain::build(lat, Cocycle::coboundary(lat, t0));
  }();
  return d;
}

DomainPtr random_domain() {
  static const DomainPtr d = [] {
    const Lattice lat = genus2_lattice();
    std::mt19937_64 rng(4);
    return EquivariantDomain::build(lat, Cocycle::random(lat, 0.3, rng));
  }();
  return d;
}

// largest |σ·f - f| over the generators at random points of the disc
double equivariance_gap(const EquivariantSupport& h) {
  const auto& d = *h.domain;
  const auto f = h.ball_function();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  double worst = 0.0;
  for (std::size_t k = 0; k < d.lattice.rank(); ++k) {
    const auto g = act_on_ball_function(affine_word(d.lattice, d.cocycle, Word{static_cast<int>(k + 1)}), f);
    for (int n = 0; n < 40; ++n) {
      const BallPoint x(u(rng), u(rng));
      if (x.norm() > 0.9) continue;
      worst = std::max(worst, std::abs(g(x) - f(x)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("Voronoi cells tile the surface") {
  const auto d = fuchsian();
  double s = 0.0;
  for (double a : d->cell_areas) {
    CHECK(a > 0.0);
    s += a;
  }
  CHECK(s == doctest::Approx(4.0 * pi).epsilon(1e-9));
  CHECK(d->fuchsian());
}

TEST_CASE("constant support functions: area and covolume") {
  const auto d = fuchsian();
  for (double t : {1.0, 2.0}) {
    const auto h = EquivariantSupport::constant(d, -t);
    CHECK(total_area(h) == doctest::Approx(4.0 * pi * t * t).epsilon(1e-2));
    // the region between the hyperboloid of radius t and the cone over a surface of area 4π
    CHECK(covolume(h) == doctest::Approx(4.0 * pi / 3.0 * t * t * t).epsilon(1e-2));
    CHECK(covol_fuchsian(h) == doctest::Approx(covolume(h)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(covolume(EquivariantSupport::constant(d, 0.5)), DomainError);
  CHECK_THROWS_AS(covol_fuchsian(EquivariantSupport::h_tau(random_domain())), DomainError);
}

TEST_CASE("constant curvature measure is solved by a constant") {
  const auto d = fuchsian();
  const auto r = solve_equivariant(InvariantMeasure::constant_curvature(d, 1.0));
  CHECK(r.converged);
  for (double v : r.h.hbar) CHECK(v == doctest::Approx(-1.0).epsilon(2e-2));
  CHECK(equivariance_gap(r.h) < 1e-9);
  const auto [a, b] = tmin_tmax(r.h);
  CHECK(a <= b);
  CHECK(a == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("coboundary: trace and solution are translates of the Fuchsian ones") {
  const auto d = coboundary();
  CHECK(!d->fuchsian());
  for (std::size_t s = 0; s < d->g_tau.size(); s += 37) {
    const double a = d->g_tau.angles[s];
    // Ω_τ = Ω_0 - t0, whose ball support on the circle is -<ℓ̂, t0>
    CHECK(d->g_tau.values[s] == doctest::Approx(-mink_inner(MinkVector(std::cos(a), std::sin(a), 1.0), t0)).epsilon(1e-6));
  }
  const auto r = solve_equivariant(InvariantMeasure{d, fuchsian()->cell_areas});
  const auto r0 = solve_equivariant(InvariantMeasure::constant_curvature(fuchsian(), 1.0));
  for (std::size_t i = 0; i < d->size(); ++i)
    CHECK(r.h.hbar[i] == doctest::Approx(r0.h.hbar[i] - mink_inner(d->rep_X[i], t0)).epsilon(1e-8));
  CHECK(equivariance_gap(r.h) < 1e-9);
}

TEST_CASE("random cocycle: trace, equivariance and monotonicity") {
  const auto d = random_domain();
  for (std::size_t k = 1; k < d->trace_gaps.size(); ++k) CHECK(d->trace_gaps[k] <= d->trace_gaps[k - 1] + 1e-12);
  const auto ht = EquivariantSupport::h_tau(d);
  CHECK(equivariance_gap(ht) < 1e-8);
  const auto h0 = EquivariantSupport{d, [&] {
                                       auto v = d->hbar_tau;
                                       for (double& x : v) x -= 1.0;
                                       return v;
                                     }()};
  auto h1 = h0;
  for (double& x : h1.hbar) x -= 0.5;
  const auto rep = monotonicity_check(h0, h1);
  CHECK(rep.nested);
  CHECK(rep.area0 < rep.area1);
  const auto [lo, hi] = sandwich_bounds(h0, h1);
  const double dc = covolume(h1) - covolume(h0);
  CHECK(lo <= dc * (1 + 1e-3));
  CHECK(dc <= hi * (1 + 1e-3));
  CHECK(covolume(h0) > 0.0);
}

TEST_CASE("invariant measures are validated") {
  const auto d = fuchsian();
  InvariantMeasure mu = InvariantMeasure::constant_curvature(d, 1.0);
  mu.mass[5] = -1.0;
  CHECK_THROWS_AS(mu.validate(), std::invalid_argument);
  mu.mass[5] = 0.0;
  CHECK_THROWS_AS(solve_equivariant(mu), std::invalid_argument);
}

TEST_CASE("smooth equivariant functions and invariant bumps") {
  const auto d = random_domain();
  const auto f = smooth_equivariant(d, MinkVector(0.1, -0.2, 2.0));
  const MinkVector X = radial_map(BallPoint(0.3, -0.5));
  for (std::size_t k = 0; k < 4; ++k) {
    const Isometry g = affine_word(d->lattice, d->cocycle, Word{static_cast<int>(k + 1)});
    const MinkVector gX = g.linear * X;
    CHECK(f(gX) == doctest::Approx(f(X) + mink_inner(gX, g.translation)).epsilon(1e-10));
    const std::vector<BallPoint> c = {BallPoint(0.2, 0.1)};
    CHECK(invariant_bumps_at(*d, c, {1.0}, 0.5, gX) == doctest::Approx(invariant_bumps_at(*d, c, {1.0}, 0.5, X)));
  }
}
