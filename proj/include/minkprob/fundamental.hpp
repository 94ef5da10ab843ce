#pragma once

// Dirichlet polygon of a cocompact lattice in the Klein (ball) model, point
// reduction into it, and a triangulated quotient mesh whose boundary nodes
// are identified through the side pairings.

#include "minkprob/lattice.hpp"
#include "minkprob/polygon.hpp"

#include <array>
#include <optional>
#include <vector>

namespace minkprob {

struct PolygonSide {
  Word word;      // γ: the side lies on the bisector of O and γO
  Mat3 linear;
  int partner = -1;  // side carrying γ^{-1}; γ^{-1} maps this side onto it
};

struct Reduction {
  BallPoint point;  // inside the polygon
  Word word;        // x = w̄(point)
  Mat3 linear = Mat3::Identity();
};

class FundamentalPolygon {
 public:
  /// Clips the ball against the bisectors of the basepoint and its images
  /// under all reduced words of length <= depth.  Throws DomainError when the
  /// depth is too small to close the polygon or a side has no partner.
  static FundamentalPolygon dirichlet(const Lattice& lattice, int depth = 2,
                                      const BallPoint& basepoint = BallPoint::Zero());

  const std::vector<BallPoint>& vertices() const { return vertices_; }
  const std::vector<PolygonSide>& sides() const { return sides_; }
  const BallPoint& basepoint() const { return basepoint_; }
  std::size_t size() const { return vertices_.size(); }

  /// Hyperbolic area by Gauss–Bonnet from the interior angles.
  double area() const;

  /// Largest violation of a side constraint (<= 0 inside).
  double violation(const BallPoint& x) const;
  bool contains(const BallPoint& x, double tol = 1e-12) const { return violation(x) <= tol; }

  Reduction reduce(const BallPoint& x) const;

  /// Largest distance between a side mapped by its pairing and its partner.
  double pairing_defect() const;

 private:
  std::vector<BallPoint> vertices_;  // ccw; side k joins vertex k and k+1
  std::vector<PolygonSide> sides_;
  BallPoint basepoint_ = BallPoint::Zero();
  MinkVector base_hyp_ = MinkVector(0, 0, 1);

  double side_value(std::size_t k, const BallPoint& x) const;
};

/// Interior angle of the geodesic polygon at vertex b between a and c.
double hyperbolic_angle(const BallPoint& a, const BallPoint& b, const BallPoint& c);

/// Area of a convex geodesic polygon given by its Klein-model vertices.
double hyperbolic_polygon_area(const std::vector<BallPoint>& vertices);

struct QuotientNode {
  BallPoint x;
  MinkVector X;  // on the hyperboloid
  int rep = -1;  // index into QuotientMesh::reps
  Word word;     // X = g · X_rep
  Mat3 linear = Mat3::Identity();
  bool on_side = false;
};

struct QuotientMesh {
  std::vector<QuotientNode> nodes;
  std::vector<std::array<int, 3>> triangles;  // ccw in the ball
  std::vector<int> reps;                      // node index of each class representative
  double max_edge = 0.0;                      // hyperbolic edge length
  int subdivisions = 0;
  std::vector<std::vector<int>> sector_nodes;  // per sector, (j, l) -> node
  std::vector<Mat3> sector_frames;             // columns O, V_k, V_{k+1} on the hyperboloid

  /// Each sector (basepoint, side) is subdivided m times.  Points are
  /// combinations of hyperboloid vectors, so paired sides match exactly.
  static QuotientMesh build(const FundamentalPolygon& poly, int m);

  struct Hit {
    std::array<int, 3> nodes{};
    std::array<double, 3> bary{};  // Euclidean barycentrics in the ball
  };
  /// Mesh triangle containing x; x must lie in the polygon up to `tol`.
  std::optional<Hit> locate(const BallPoint& x, double tol = 1e-9) const;
};

}  // namespace minkprob
