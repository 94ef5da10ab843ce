#pragma once

// Polar discretization of the unit disk and the function/data types living on
// it.  Node 0 is the centre; ring k (1..rings) carries `angular` nodes at
// radius rho_max*k/rings, angles 2πj/angular.  The outermost ring is the
// boundary ring where Dirichlet data is imposed.

#include "minkprob/minkowski.hpp"
#include "minkprob/polygon.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace minkprob {

using BallFunction = std::function<double(const BallPoint&)>;

class BallGrid {
 public:
  BallGrid(int rings = 48, int angular = 96, double rho_max = 0.995);

  int rings() const { return rings_; }
  int angular() const { return angular_; }
  double rho_max() const { return rho_max_; }
  double spacing() const { return rho_max_ / rings_; }

  std::size_t size() const { return nodes_.size(); }
  const std::vector<BallPoint>& nodes() const { return nodes_; }
  const BallPoint& node(std::size_t i) const { return nodes_[i]; }

  std::size_t index(int ring, int j) const;
  int ring_of(std::size_t i) const { return ring_[i]; }
  int angle_index(std::size_t i) const { return angle_[i]; }
  double angle(std::size_t i) const;
  bool on_boundary(std::size_t i) const { return ring_[i] == rings_; }
  std::vector<std::size_t> boundary_ring() const;
  std::vector<std::size_t> interior_nodes() const;

  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  /// Mesh neighbours (1-ring) of a node.
  const std::vector<int>& neighbors(std::size_t i) const { return neighbors_[i]; }
  /// Nodes within two mesh edges, excluding i itself.
  std::vector<int> two_ring(std::size_t i) const;

  /// Euclidean area of the polar control cell of a node (a partition of the
  /// disk of radius rho_max).
  double cell_area(std::size_t i) const;
  /// Hyperbolic area of the same cell (exact: ∫ λ^{-3} over the polar cell).
  double hyperbolic_cell_area(std::size_t i) const;

  bool operator==(const BallGrid& other) const {
    return rings_ == other.rings_ && angular_ == other.angular_ && rho_max_ == other.rho_max_;
  }

 private:
  int rings_, angular_;
  double rho_max_;
  std::vector<BallPoint> nodes_;
  std::vector<int> ring_, angle_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> neighbors_;
  // inner/outer radius of the control cell of ring k
  double cell_inner(int ring) const;
  double cell_outer(int ring) const;
};

using GridPtr = std::shared_ptr<const BallGrid>;

GridPtr make_grid(int rings = 48, int angular = 96, double rho_max = 0.995);

enum class ConvexFlag { unknown, verified, failed };

/// Piecewise-linear function on the grid nodes.  Between nodes it is read as
/// the lower convex hull of the lifted nodes (the only interpolation used by
/// the solvers).
struct PLFunctionB {
  GridPtr grid;
  std::vector<double> values;
  ConvexFlag convex_flag = ConvexFlag::unknown;

  PLFunctionB() = default;
  PLFunctionB(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {}

  static PLFunctionB sample(GridPtr g, const BallFunction& f);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Value of the lower hull of the lifted nodes at x (x inside the boundary ring polygon).
  double evaluate(const BallPoint& x) const;
  BallFunction evaluator() const;
};

/// CSV: ring,angle,x1,x2,value
void write_function_csv(std::ostream& out, const PLFunctionB& h);
PLFunctionB read_function_csv(std::istream& in);

/// Samples of a function on ∂B, piecewise linear and periodic in the angle.
struct BoundaryData {
  std::vector<double> angles;  // increasing in [0, 2π)
  std::vector<double> values;

  static BoundaryData from_function(const std::function<double(double)>& g, int samples);
  double operator()(double angle) const;
  std::size_t size() const { return angles.size(); }
  void validate() const;
};

/// CSV: angle,value
void write_boundary_csv(std::ostream& out, const BoundaryData& g);
BoundaryData read_boundary_csv(std::istream& in);

/// Shared CSV helpers: full-precision numbers and header-aware parsing.
std::string format_double(double v);
std::vector<std::vector<double>> read_numeric_csv(std::istream& in, std::size_t columns);

}  // namespace minkprob
