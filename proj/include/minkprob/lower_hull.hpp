#pragma once

// Lower convex hull of lifted planar points (x_i, z_i), stored as its
// projection: a regular triangulation of the vertices that survive.  Points
// strictly above the hull, or lying on a flat facet, are "hidden".

#include "minkprob/polygon.hpp"

#include <array>
#include <span>
#include <vector>

namespace minkprob {

class LowerHull {
 public:
  struct Triangle {
    std::array<int, 3> v{};   // counter-clockwise vertex indices
    std::array<int, 3> nb{};  // nb[k] lies across the edge opposite v[k]; -1 on the hull boundary
    bool alive = true;
  };

  /// `height_tol` is relative to the largest |z|.
  LowerHull(std::span<const Vec2> points, std::span<const double> heights, double height_tol = 1e-12);

  std::size_t size() const { return points_.size(); }
  bool is_vertex(std::size_t i) const { return vertex_[i]; }
  bool on_boundary(std::size_t i) const { return boundary_[i]; }

  /// Value of the lower hull at node i (equals the input height at vertices).
  double envelope(std::size_t i) const { return envelope_[i]; }
  const std::vector<double>& envelope() const { return envelope_; }

  /// Lower hull at an arbitrary point of the convex hull of the inputs.
  double evaluate(const Vec2& x) const;

  std::vector<std::array<int, 3>> triangles() const;
  Vec2 gradient(std::size_t tri) const { return gradients_[tri]; }

  /// Alive triangles around a vertex, counter-clockwise.
  std::vector<int> star(std::size_t vertex) const;

  /// Subdifferential of the hull at a vertex: hull of the incident facet
  /// gradients (merged within `merge_tol`).  Empty for hidden nodes and for
  /// vertices on the outer boundary (their subdifferential is unbounded).
  std::vector<Vec2> subdifferential(std::size_t vertex, double merge_tol = 1e-9) const;
  double subdifferential_area(std::size_t vertex, double merge_tol = 1e-9) const;

  struct DualEdge {
    int a, b;         // hull edge between vertices a and b
    double length;    // |∇(left facet) - ∇(right facet)|
  };
  /// Interior edges with the length of their dual segment in gradient space.
  std::vector<DualEdge> dual_edges() const;

  /// Largest amount by which an interior edge fails local convexity (0 when
  /// the triangulation is the lower hull).
  double max_reflex_defect() const;

  /// Number of the remaining non-convex interior edges (diagnostic).
  std::size_t reflex_edge_count() const;

 private:
  std::vector<Vec2> points_;
  std::vector<double> heights_;
  std::vector<Triangle> tris_;
  std::vector<int> vertex_tri_;
  std::vector<bool> vertex_;
  std::vector<bool> boundary_;
  std::vector<double> envelope_;
  std::vector<Vec2> gradients_;
  double eps_ = 0.0;
  double area_eps_ = 0.0;
  mutable int last_located_ = 0;

  void build();
  void insert(int p);
  int locate(const Vec2& x) const;
  double plane_at(int t, const Vec2& x) const;
  bool reflex(int t, int k) const;
  double reflex_amount(int t, int k) const;
  bool try_fix_edge(int t, int k, std::vector<std::pair<int, int>>* stack);
  void flip22(int t, int k);
  void remove_degree3(int r);
  bool interior_degree3(int r) const;
  bool remove_on_segment(int r, int p, int q);
  void compact();
  int edge_slot(int t, int a, int b) const;
  void set_neighbor(int t, int a, int b, int value);
  void legalize_all();
  void finalize();
  double orient(int a, int b, int c) const;
  double orient_point(int a, int b, const Vec2& p) const;
};

}  // namespace minkprob
