#pragma once

// Laguerre (power) cell of one node in gradient space:
//   {p : ⟨p, y_j - x⟩ <= H_j - h for all stencil nodes j},
// the subdifferential at x of the lower hull of the node and its stencil.

#include "minkprob/polygon.hpp"

#include <span>
#include <vector>

namespace minkprob {

struct LaguerreCell {
  ConvexPolygon polygon;  // edge labels index the stencil
  double area = 0.0;
  bool bounded = true;

  /// Length of the facet contributed by stencil entry j (0 when inactive).
  double facet_length(int j) const;
};

LaguerreCell laguerre_cell(const Vec2& x, double h, std::span<const Vec2> ys, std::span<const double> heights);

/// Area only, for inner loops.
double laguerre_area(const Vec2& x, double h, std::span<const Vec2> ys, std::span<const double> heights);

}  // namespace minkprob
