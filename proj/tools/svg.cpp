#include "svg.hpp"

#include "minkprob/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace minkprob::cli {
namespace {

// viridis, sampled at five stops
std::string colour(double s) {
  static const double stops[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  s = std::clamp(s, 0.0, 1.0) * 4.0;
  const int k = std::min(3, static_cast<int>(s));
  const double f = s - k;
  char buf[16];
  int c[3];
  for (int i = 0; i < 3; ++i) c[i] = static_cast<int>(std::lround(stops[k][i] + f * (stops[k + 1][i] - stops[k][i])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

void write_svg(const std::string& path, const HeatMap& map) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  double lo = 1e300, hi = -1e300;
  for (double v : map.values)
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!(hi > lo)) hi = lo + 1.0;
  const double size = 520.0, scale = 240.0, cx = 260.0, cy = 270.0;
  auto X = [&](const BallPoint& p) { return coord(cx + scale * p[0]); };
  auto Y = [&](const BallPoint& p) { return coord(cy - scale * p[1]); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 80 << "\" height=\"" << size + 20
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"10\" y=\"16\">" << map.title << "</text>\n";
  for (const auto& t : map.triangles) {
    const double v = (map.values[t[0]] + map.values[t[1]] + map.values[t[2]]) / 3.0;
    const std::string c = colour((v - lo) / (hi - lo));
    out << "<polygon points=\"";
    for (int k = 0; k < 3; ++k) out << (k ? " " : "") << X(map.points[t[k]]) << ',' << Y(map.points[t[k]]);
    out << "\" fill=\"" << c << "\" stroke=\"" << c << "\" stroke-width=\"0.3\"/>\n";
  }
  if (!map.outline.empty()) {
    out << "<polygon points=\"";
    for (std::size_t k = 0; k < map.outline.size(); ++k) out << (k ? " " : "") << X(map.outline[k]) << ',' << Y(map.outline[k]);
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << scale
      << "\" fill=\"none\" stroke=\"grey\" stroke-dasharray=\"4 3\"/>\n";
  // colour bar
  for (int k = 0; k < 50; ++k)
    out << "<rect x=\"530\" y=\"" << coord(480.0 - 8.0 * k) << "\" width=\"16\" height=\"8.5\" fill=\"" << colour(k / 49.0)
        << "\"/>\n";
  out << "<text x=\"550\" y=\"488\">" << format_double(lo).substr(0, 9) << "</text>\n";
  out << "<text x=\"550\" y=\"96\">" << format_double(hi).substr(0, 9) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace minkprob::cli
