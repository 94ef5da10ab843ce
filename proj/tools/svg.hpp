#pragma once

// Heat maps of nodal data on triangulations of the unit disc, written as
// plain SVG.

#include "minkprob/minkowski.hpp"

#include <array>
#include <string>
#include <vector>

namespace minkprob::cli {

struct HeatMap {
  std::string title;
  std::vector<BallPoint> points;
  std::vector<std::array<int, 3>> triangles;
  std::vector<double> values;  // per point; triangles take the mean
  std::vector<BallPoint> outline;  // optional closed polygon drawn on top
};

void write_svg(const std::string& path, const HeatMap& map);

}  // namespace minkprob::cli
