#include "minkprob/pogorelov.hpp"

#include "minkprob/parallel.hpp"
#include "minkprob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace minkprob {

PogorelovFn::PogorelovFn(int d, int k, double beta, PogorelovForm form)
    : d_(d), k_(k), beta_(beta), alpha_(2.0 * k / d), form_(form) {
  if (d < 2) throw std::invalid_argument("Pogorelov function needs d >= 2");
  if (2 * k <= d) throw std::invalid_argument("Pogorelov function needs k > d/2 (got d=" + std::to_string(d) +
                                              ", k=" + std::to_string(k) + ")");
  if (k >= d) throw std::invalid_argument("k = d leaves no flat set of positive dimension");
  if (!(beta >= 1.0)) throw std::invalid_argument("beta must be at least 1");
}

double PogorelovFn::r(const Eigen::VectorXd& x) const { return x.tail(k_).norm(); }
double PogorelovFn::t(const Eigen::VectorXd& x) const { return x.head(d_ - k_).norm(); }

double PogorelovFn::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != d_) throw std::invalid_argument("point has the wrong dimension");
  const double rr = r(x), tt = t(x);
  const double ra = rr == 0.0 ? 0.0 : std::pow(rr, alpha_);
  if (form_ == PogorelovForm::literal) return beta_ * ra * (1.0 + beta_ * tt * tt);
  return ra * (beta_ + tt * tt);
}

double fd_hessian_det(const PogorelovFn& f, const Eigen::VectorXd& x, double h) {
  const int d = f.d();
  Eigen::MatrixXd H(d, d);
  const double f0 = f(x);
  Eigen::VectorXd y = x;
  for (int i = 0; i < d; ++i) {
    y[i] = x[i] + h;
    const double fp = f(y);
    y[i] = x[i] - h;
    const double fm = f(y);
    y[i] = x[i];
    H(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    for (int j = i + 1; j < d; ++j) {
      double s = 0.0;
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          y[i] = x[i] + si * h;
          y[j] = x[j] + sj * h;
          s += si * sj * f(y);
        }
      }
      y[i] = x[i];
      y[j] = x[j];
      H(i, j) = H(j, i) = s / (4.0 * h * h);
    }
  }
  return H.determinant();
}

std::vector<Eigen::VectorXd> halton_ball_points(int d, int k, std::size_t count, double tube) {
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (d > 10) throw std::invalid_argument("Halton sampling supports d <= 10");
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(count);
  for (unsigned long long i = 1; pts.size() < count; ++i) {
    Eigen::VectorXd x(d);
    for (int j = 0; j < d; ++j) x[j] = 2.0 * halton(i, primes[j]) - 1.0;
    if (x.norm() >= 1.0) continue;
    if (x.tail(k).norm() < tube) continue;
    pts.push_back(x);
  }
  return pts;
}

LowerBoundReport check_lower_bound(const PogorelovFn& f, std::size_t samples, double tube) {
  const auto pts = halton_ball_points(f.d(), f.k(), samples, tube);
  std::vector<double> det(pts.size());
  parallel_for(pts.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) det[i] = fd_hessian_det(f, pts[i]);
  });
  LowerBoundReport rep;
  rep.beta = f.beta();
  rep.samples = pts.size();
  rep.min_det = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (det[i] < rep.min_det) {
      rep.min_det = det[i];
      rep.argmin = pts[i];
    }
    if (det[i] <= 0.0) ++rep.negative;
  }
  // The flat set: points with r = 0.
  for (std::size_t i = 0; i < 1000; ++i) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(f.d());
    for (int j = 0; j < f.d() - f.k(); ++j) x[j] = (2.0 * halton(i + 1, j == 0 ? 2 : 3) - 1.0) / std::sqrt(f.d() - f.k());
    rep.max_on_segment = std::max(rep.max_on_segment, std::abs(f(x)));
  }
  return rep;
}

BetaSearch search_beta(int d, int k, PogorelovForm form, double c0, std::size_t samples,
                       const std::vector<double>& betas) {
  BetaSearch s;
  s.c0 = c0;
  for (double b : betas) {
    s.scans.push_back(check_lower_bound(PogorelovFn(d, k, b, form), samples));
    const double m = s.scans.back().min_det;
    if (c0 > 0.0 ? m >= c0 : m > 0.0) {
      s.found = true;
      s.beta = b;
      break;
    }
  }
  return s;
}

C1Report c1_check(const PogorelovFn& f, const std::vector<double>& radii) {
  C1Report rep;
  const int d = f.d();
  for (double rad : radii) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
    x[0] = d > f.k() ? 0.3 : 0.0;
    x[d - 1] = rad;
    const double h = 1e-3 * rad;
    Eigen::VectorXd grad(d);
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXd a = x, b = x;
      a[i] += h;
      b[i] -= h;
      grad[i] = (f(a) - f(b)) / (2.0 * h);
    }
    rep.radii.push_back(rad);
    rep.radial_derivative.push_back(grad.tail(f.k()).norm());
    rep.tangential_derivative.push_back(grad.head(d - f.k()).norm());
  }
  return rep;
}

SharpnessReport sharpness_contrast(std::size_t samples) {
  SharpnessReport r;
  const BoundaryData zero = BoundaryData::from_function([](double) { return 0.0; }, 96);
  r.probe = alexandrov_heinz_probe(1.0, zero);
  r.control = alexandrov_heinz_probe(0.0, zero);
  r.literal = search_beta(3, 2, PogorelovForm::literal, 0.0, samples);
  r.rescaled = search_beta(3, 2, PogorelovForm::rescaled, 0.0, samples);
  if (r.rescaled.found) r.c1 = c1_check(PogorelovFn(3, 2, r.rescaled.beta, PogorelovForm::rescaled));
  return r;
}

namespace {

nlohmann::json probe_json(const AlexandrovHeinzReport& p) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : p.levels) levels.push_back({{"rings", l.rings}, {"angular", l.angular}, {"h_center", l.h_center}});
  return {{"c0", p.c0}, {"c", p.c}, {"spread", p.spread}, {"levels", levels}};
}

}  // namespace

nlohmann::json to_json(const BetaSearch& s) {
  nlohmann::json scans = nlohmann::json::array();
  for (const auto& r : s.scans) {
    std::vector<double> arg(r.argmin.data(), r.argmin.data() + r.argmin.size());
    scans.push_back({{"beta", r.beta},
                     {"min_det_hess", r.min_det},
                     {"argmin", arg},
                     {"samples", r.samples},
                     {"non_positive", r.negative},
                     {"max_abs_f_on_flat_set", r.max_on_segment}});
  }
  nlohmann::json j{{"found", s.found}, {"c0", s.c0}, {"scans", scans}};
  if (s.found) j["beta"] = s.beta;
  return j;
}

nlohmann::json to_json(const SharpnessReport& r) {
  return {{"alexandrov_heinz", probe_json(r.probe)},
          {"alexandrov_heinz_control", probe_json(r.control)},
          {"pogorelov_literal", to_json(r.literal)},
          {"pogorelov_rescaled", to_json(r.rescaled)},
          {"c1", {{"radii", r.c1.radii}, {"radial_derivative", r.c1.radial_derivative},
                  {"tangential_derivative", r.c1.tangential_derivative}}}};
}

}  // namespace minkprob
