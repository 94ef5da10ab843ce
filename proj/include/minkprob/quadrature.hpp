#pragma once

#include <utility>
#include <vector>

namespace minkprob {

/// Gauss–Legendre nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Radical inverse of `index` in the given prime base (Halton coordinate).
double halton(unsigned long long index, unsigned base);

}  // namespace minkprob
