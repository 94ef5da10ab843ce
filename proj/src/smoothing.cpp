#include "minkprob/smoothing.hpp"

#include "minkprob/lower_hull.hpp"
#include "minkprob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace minkprob {

namespace {

// Orthonormal tangent frame at X.
std::pair<MinkVector, MinkVector> tangent_frame(const MinkVector& X) {
  MinkVector e1(1.0, 0.0, 0.0), e2(0.0, 1.0, 0.0);
  e1 += mink_inner(e1, X) * X;
  e1 /= std::sqrt(mink_inner(e1, e1));
  e2 += mink_inner(e2, X) * X;
  e2 -= mink_inner(e2, e1) * e1;
  e2 /= std::sqrt(mink_inner(e2, e2));
  return {e1, e2};
}

double average_at(const HyperboloidFunction& h, double r, const AverageQuadrature& q,
                  const std::vector<double>& nodes, const std::vector<double>& weights, const MinkVector& X) {
  const auto [e1, e2] = tangent_frame(X);
  const double dtheta = 2.0 * std::numbers::pi / q.angular;
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double rho = nodes[i];
    double ring = 0.0;
    for (int k = 0; k < q.angular; ++k) {
      const double th = dtheta * k;
      const MinkVector Y = std::cosh(rho) * X + std::sinh(rho) * (std::cos(th) * e1 + std::sin(th) * e2);
      ring += h(Y);
    }
    s += weights[i] * std::sinh(rho) * ring * dtheta;
  }
  const double sh = std::sinh(r);
  return s / (std::numbers::pi * sh * sh);
}

}  // namespace

MinkVector geodesic_polar(const MinkVector& X, double rho, double theta) {
  const auto [e1, e2] = tangent_frame(X);
  return std::cosh(rho) * X + std::sinh(rho) * (std::cos(theta) * e1 + std::sin(theta) * e2);
}

HyperboloidFunction hyperbolic_average(HyperboloidFunction h, double r, AverageQuadrature q) {
  if (!(r > 0.0)) throw std::invalid_argument("averaging radius must be positive");
  if (q.radial < 1 || q.angular < 3) throw std::invalid_argument("quadrature too small");
  auto [nodes, weights] = gauss_legendre(q.radial, 0.0, r);

  // Linear functions are fixed points; use that as a calibration check.
  const MinkVector p(0.37, -0.21, 1.3);
  const HyperboloidFunction lin = [&](const MinkVector& Y) { return mink_inner(Y, p); };
  for (const BallPoint& x : {BallPoint(0.0, 0.0), BallPoint(0.5, -0.3), BallPoint(-0.7, 0.6)}) {
    const MinkVector X = radial_map(x);
    const double err = std::abs(average_at(lin, r, q, nodes, weights, X) - mink_inner(X, p));
    if (err > 1e-6 * std::max(1.0, std::abs(mink_inner(X, p)))) {
      throw std::runtime_error("averaging quadrature fails the linear self-test (error " + std::to_string(err) + ")");
    }
  }
  return [h = std::move(h), r, q, nodes = std::move(nodes), weights = std::move(weights)](const MinkVector& X) {
    return average_at(h, r, q, nodes, weights, X);
  };
}

std::vector<BallPoint> Patch::points() const {
  std::vector<BallPoint> pts{centre};
  for (int i = 1; i <= rings; ++i) {
    const double rho = radius * i / rings;
    for (int k = 0; k < angular; ++k) {
      const double a = 2.0 * std::numbers::pi * k / angular;
      pts.emplace_back(centre[0] + rho * std::cos(a), centre[1] + rho * std::sin(a));
    }
  }
  for (const auto& p : pts) {
    if (p.norm() >= 1.0) throw DomainError("patch leaves the ball");
  }
  return pts;
}

double patch_convexity_defect(const HyperboloidFunction& h, const Patch& patch) {
  const auto pts = patch.points();
  std::vector<Vec2> xs(pts.begin(), pts.end());
  std::vector<double> zs;
  for (const auto& x : pts) zs.push_back(lambda(x) * h(radial_map(x)));
  const LowerHull hull(xs, zs);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) worst = std::max(worst, zs[i] - hull.envelope(i));
  return worst;
}

CorrectedFunction support_correction(HyperboloidFunction h, double r, const Patch& patch, double C_safety,
                                     AverageQuadrature q, double convex_tol) {
  const HyperboloidFunction avg = hyperbolic_average(h, r, q);
  const auto pts = patch.points();

  // Lipschitz constant over the r-neighbourhood from short geodesic chords.
  const double delta = std::min(0.02, 0.25 * r);
  double lip = 0.0;
  for (const auto& x : pts) {
    const MinkVector X = radial_map(x);
    for (double rho : {0.0, 0.5 * r, r}) {
      for (int k = 0; k < 8; ++k) {
        const MinkVector Y = rho > 0.0 ? geodesic_polar(X, rho, std::numbers::pi * k / 4.0) : X;
        for (int j = 0; j < 4; ++j) {
          const MinkVector Z = geodesic_polar(Y, delta, std::numbers::pi * j / 4.0 + 0.1);
          lip = std::max(lip, std::abs(h(Z) - h(Y)) / delta);
        }
        if (rho == 0.0) break;
      }
    }
  }

  CorrectionReport rep;
  rep.lipschitz = lip;
  std::vector<double> orig, smooth;
  for (const auto& x : pts) {
    const MinkVector X = radial_map(x);
    orig.push_back(h(X));
    smooth.push_back(avg(X));
    rep.sup_average_gap = std::max(rep.sup_average_gap, std::abs(orig.back() - smooth.back()));
  }
  double cs = C_safety;
  for (int attempt = 0; attempt <= 3; ++attempt, cs *= 2.0) {
    const double shift = cs * lip * r;
    const HyperboloidFunction corrected = [avg, shift](const MinkVector& X) { return avg(X) - shift; };
    rep.attempts = attempt + 1;
    rep.C_safety = cs;
    rep.C = cs * lip;
    // Convexity of the ball values on the patch, reusing the sampled averages.
    std::vector<Vec2> xs(pts.begin(), pts.end());
    std::vector<double> zs;
    for (std::size_t i = 0; i < pts.size(); ++i) zs.push_back(lambda(pts[i]) * (smooth[i] - shift));
    const LowerHull hull(xs, zs);
    rep.convexity_defect = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      rep.convexity_defect = std::max(rep.convexity_defect, zs[i] - hull.envelope(i));
    }
    rep.sup_corrected_gap = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      rep.sup_corrected_gap = std::max(rep.sup_corrected_gap, std::abs(orig[i] - (smooth[i] - shift)));
    }
    if (rep.convexity_defect <= convex_tol) {
      rep.passed = true;
      return {corrected, rep};
    }
  }
  throw std::runtime_error("support correction failed the convexity test (defect " +
                           std::to_string(rep.convexity_defect) + ")");
}

}  // namespace minkprob
