#include "minkprob/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minkprob {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const auto k = static_cast<std::size_t>(i);
    x[k] = 0.5 * (a + b) - 0.5 * (b - a) * z;
    w[k] = (b - a) / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

double halton(unsigned long long index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace minkprob
