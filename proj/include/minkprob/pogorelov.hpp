#pragma once

// Pogorelov-type functions on B^d, flat on the (d-k)-ball {r = 0}, with
// α = 2k/d and k > d/2.  The literal form β r^α (1 + β t²) loses convexity
// where β t² is large (for d = 3, k = 2, det Hess has the sign of
// 1 - 7 β t²); the rescaled form keeps it for β >= 8.

#include "minkprob/dirichlet.hpp"

#include <Eigen/Dense>

#include <json.hpp>

#include <vector>

namespace minkprob {

enum class PogorelovForm {
  literal,   // β r^α (1 + β t²)
  rescaled,  // β r^α (1 + t²/β) = r^α (β + t²)
};

class PogorelovFn {
 public:
  /// Throws std::invalid_argument unless d/2 < k < d and β >= 1.
  PogorelovFn(int d, int k, double beta, PogorelovForm form = PogorelovForm::literal);

  int d() const { return d_; }
  int k() const { return k_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  PogorelovForm form() const { return form_; }

  /// r: norm of the last k coordinates; t: norm of the first d - k.
  double r(const Eigen::VectorXd& x) const;
  double t(const Eigen::VectorXd& x) const;
  double operator()(const Eigen::VectorXd& x) const;

 private:
  int d_, k_;
  double beta_, alpha_;
  PogorelovForm form_;
};

/// det of the central-difference Hessian with the given step.
double fd_hessian_det(const PogorelovFn& f, const Eigen::VectorXd& x, double step = 1e-4);

/// Point i of the Halton sequence mapped into B^d outside the tube {r < tube};
/// deterministic.
std::vector<Eigen::VectorXd> halton_ball_points(int d, int k, std::size_t count, double tube = 1e-3);

struct LowerBoundReport {
  double beta = 0.0;
  double min_det = 0.0;
  Eigen::VectorXd argmin;
  std::size_t samples = 0;
  std::size_t negative = 0;  // samples with det Hess <= 0
  double max_on_segment = 0.0;  // max |f| at r = 0 samples
};

LowerBoundReport check_lower_bound(const PogorelovFn& f, std::size_t samples = 100000, double tube = 1e-3);

struct BetaSearch {
  bool found = false;
  double beta = 0.0;
  double c0 = 0.0;
  std::vector<LowerBoundReport> scans;
};

/// Smallest β in the scan whose sampled minimum exceeds c0 (strictly when
/// c0 = 0).
BetaSearch search_beta(int d, int k, PogorelovForm form, double c0 = 0.0, std::size_t samples = 100000,
                       const std::vector<double>& betas = {1, 2, 4, 8, 16});

struct C1Report {
  std::vector<double> radii;
  std::vector<double> radial_derivative;      // |∂f/∂r| at the radius
  std::vector<double> tangential_derivative;  // |∇_t f|, which tends to 0 too on the flat set
};
C1Report c1_check(const PogorelovFn& f, const std::vector<double>& radii = {1e-2, 1e-3, 1e-4});

struct SharpnessReport {
  AlexandrovHeinzReport probe;
  AlexandrovHeinzReport control;  // c0 = 0
  BetaSearch literal;
  BetaSearch rescaled;
  C1Report c1;
};

SharpnessReport sharpness_contrast(std::size_t samples = 100000);
nlohmann::json to_json(const SharpnessReport& r);
nlohmann::json to_json(const BetaSearch& s);

}  // namespace minkprob
