#include "minkprob/grid.hpp"

#include "minkprob/lower_hull.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minkprob {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

BallGrid::BallGrid(int rings, int angular, double rho_max) : rings_(rings), angular_(angular), rho_max_(rho_max) {
  if (rings < 2 || angular < 3) throw std::invalid_argument("BallGrid: need rings >= 2 and angular >= 3");
  if (!(rho_max > 0.0 && rho_max < 1.0)) throw std::invalid_argument("BallGrid: rho_max must lie in (0, 1)");
  nodes_.emplace_back(0.0, 0.0);
  ring_.push_back(0);
  angle_.push_back(0);
  for (int k = 1; k <= rings; ++k) {
    const double r = rho_max * k / rings;
    for (int j = 0; j < angular; ++j) {
      const double a = kTwoPi * j / angular;
      nodes_.emplace_back(r * std::cos(a), r * std::sin(a));
      ring_.push_back(k);
      angle_.push_back(j);
    }
  }
  for (int j = 0; j < angular; ++j) {
    triangles_.push_back({0, static_cast<int>(index(1, j)), static_cast<int>(index(1, (j + 1) % angular))});
  }
  for (int k = 1; k < rings; ++k) {
    for (int j = 0; j < angular; ++j) {
      const int a = static_cast<int>(index(k, j)), b = static_cast<int>(index(k, (j + 1) % angular));
      const int c = static_cast<int>(index(k + 1, j)), d = static_cast<int>(index(k + 1, (j + 1) % angular));
      triangles_.push_back({a, c, d});
      triangles_.push_back({a, d, b});
    }
  }
  std::vector<std::set<int>> adj(nodes_.size());
  for (const auto& t : triangles_) {
    for (int e = 0; e < 3; ++e) {
      adj[t[e]].insert(t[(e + 1) % 3]);
      adj[t[(e + 1) % 3]].insert(t[e]);
    }
  }
  neighbors_.resize(nodes_.size());
  for (std::size_t i = 0; i < adj.size(); ++i) neighbors_[i].assign(adj[i].begin(), adj[i].end());
}

GridPtr make_grid(int rings, int angular, double rho_max) {
  return std::make_shared<const BallGrid>(rings, angular, rho_max);
}

std::size_t BallGrid::index(int ring, int j) const {
  if (ring == 0) return 0;
  j %= angular_;
  if (j < 0) j += angular_;
  return 1 + static_cast<std::size_t>(ring - 1) * angular_ + j;
}

double BallGrid::angle(std::size_t i) const { return kTwoPi * angle_[i] / angular_; }

std::vector<std::size_t> BallGrid::boundary_ring() const {
  std::vector<std::size_t> out;
  for (int j = 0; j < angular_; ++j) out.push_back(index(rings_, j));
  return out;
}

std::vector<std::size_t> BallGrid::interior_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!on_boundary(i)) out.push_back(i);
  return out;
}

std::vector<int> BallGrid::two_ring(std::size_t i) const {
  std::set<int> s;
  for (int j : neighbors_[i]) {
    s.insert(j);
    for (int k : neighbors_[j]) s.insert(k);
  }
  s.erase(static_cast<int>(i));
  return {s.begin(), s.end()};
}

double BallGrid::cell_inner(int ring) const { return ring == 0 ? 0.0 : spacing() * (ring - 0.5); }

double BallGrid::cell_outer(int ring) const {
  return ring == rings_ ? rho_max_ : spacing() * (ring + 0.5);
}

double BallGrid::cell_area(std::size_t i) const {
  const int k = ring_[i];
  const double r0 = cell_inner(k), r1 = cell_outer(k);
  const double sector = k == 0 ? kTwoPi : kTwoPi / angular_;
  return 0.5 * sector * (r1 * r1 - r0 * r0);
}

double BallGrid::hyperbolic_cell_area(std::size_t i) const {
  // ∫ r (1 - r²)^{-3/2} dr = (1 - r²)^{-1/2}
  const int k = ring_[i];
  const double r0 = cell_inner(k), r1 = cell_outer(k);
  const double sector = k == 0 ? kTwoPi : kTwoPi / angular_;
  return sector * (1.0 / std::sqrt(1.0 - r1 * r1) - 1.0 / std::sqrt(1.0 - r0 * r0));
}

PLFunctionB PLFunctionB::sample(GridPtr g, const BallFunction& f) {
  std::vector<double> v(g->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(g->node(i));
  return PLFunctionB(std::move(g), std::move(v));
}

double PLFunctionB::evaluate(const BallPoint& x) const {
  LowerHull hull(grid->nodes(), values);
  return hull.evaluate(x);
}

BallFunction PLFunctionB::evaluator() const {
  auto hull = std::make_shared<const LowerHull>(grid->nodes(), values);
  return [hull](const BallPoint& x) { return hull->evaluate(x); };
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& in, std::size_t columns) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": non-numeric field");
    }
    if (row.size() != columns)
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                                  " columns, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_function_csv(std::ostream& out, const PLFunctionB& h) {
  const BallGrid& g = *h.grid;
  out << "ring,angle,x1,x2,value\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.ring_of(i) << ',' << format_double(g.angle(i)) << ',' << format_double(g.node(i)[0]) << ','
        << format_double(g.node(i)[1]) << ',' << format_double(h.values[i]) << '\n';
  }
}

PLFunctionB read_function_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, 5);
  if (rows.empty()) throw std::invalid_argument("function CSV: no rows");
  int rings = 0;
  std::map<int, int> per_ring;
  double rho = 0.0;
  for (const auto& r : rows) {
    const int k = static_cast<int>(std::lround(r[0]));
    if (k < 0 || std::abs(r[0] - k) > 1e-9) throw std::invalid_argument("function CSV: bad ring index");
    per_ring[k]++;
    if (k > rings) {
      rings = k;
      rho = std::hypot(r[2], r[3]);
    } else if (k == rings) {
      rho = std::max(rho, std::hypot(r[2], r[3]));
    }
  }
  // the angle-0 node carries ρ without rounding
  for (const auto& r : rows)
    if (std::lround(r[0]) == rings && r[1] == 0.0 && r[3] == 0.0) rho = r[2];
  if (per_ring[0] != 1 || rings < 2) throw std::invalid_argument("function CSV: not a polar grid");
  const int angular = per_ring[1];
  for (int k = 1; k <= rings; ++k)
    if (per_ring[k] != angular) throw std::invalid_argument("function CSV: ragged rings");
  auto grid = make_grid(rings, angular, rho);
  std::vector<double> values(grid->size(), 0.0);
  std::vector<bool> seen(grid->size(), false);
  for (const auto& r : rows) {
    const int k = static_cast<int>(std::lround(r[0]));
    const int j = static_cast<int>(std::lround(r[1] * angular / kTwoPi));
    const std::size_t i = grid->index(k, j);
    if (seen[i]) throw std::invalid_argument("function CSV: duplicate node");
    if ((grid->node(i) - BallPoint(r[2], r[3])).norm() > 1e-9)
      throw std::invalid_argument("function CSV: node coordinates do not match a polar grid");
    seen[i] = true;
    values[i] = r[4];
  }
  return PLFunctionB(grid, std::move(values));
}

BoundaryData BoundaryData::from_function(const std::function<double(double)>& g, int samples) {
  BoundaryData b;
  for (int j = 0; j < samples; ++j) {
    const double a = kTwoPi * j / samples;
    b.angles.push_back(a);
    b.values.push_back(g(a));
  }
  return b;
}

void BoundaryData::validate() const {
  if (angles.size() != values.size()) throw std::invalid_argument("BoundaryData: size mismatch");
  if (angles.size() < 3) throw std::invalid_argument("BoundaryData: need at least 3 samples");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(values[i]) || !std::isfinite(angles[i]))
      throw std::invalid_argument("BoundaryData: non-finite sample");
    if (angles[i] < 0.0 || angles[i] >= kTwoPi) throw std::invalid_argument("BoundaryData: angle outside [0, 2π)");
    if (i > 0 && angles[i] <= angles[i - 1]) throw std::invalid_argument("BoundaryData: angles must increase");
  }
}

double BoundaryData::operator()(double angle) const {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  const std::size_t n = angles.size();
  auto it = std::upper_bound(angles.begin(), angles.end(), a);
  const std::size_t hi = (it == angles.end()) ? 0 : static_cast<std::size_t>(it - angles.begin());
  const std::size_t lo = (hi + n - 1) % n;
  double a0 = angles[lo], a1 = angles[hi];
  if (a1 <= a0) a1 += kTwoPi;
  double t = a;
  if (t < a0) t += kTwoPi;
  const double w = (a1 - a0) > 0.0 ? (t - a0) / (a1 - a0) : 0.0;
  return (1.0 - w) * values[lo] + w * values[hi];
}

void write_boundary_csv(std::ostream& out, const BoundaryData& g) {
  out << "angle,value\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << format_double(g.angles[i]) << ',' << format_double(g.values[i]) << '\n';
}

BoundaryData read_boundary_csv(std::istream& in) {
  BoundaryData b;
  for (const auto& r : read_numeric_csv(in, 2)) {
    b.angles.push_back(r[0]);
    b.values.push_back(r[1]);
  }
  b.validate();
  return b;
}

}  // namespace minkprob
