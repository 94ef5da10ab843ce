#include "minkprob/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace minkprob {

namespace {

MinkVector bisector_normal(const MinkVector& base, const Mat3& g) { return base - g * base; }

// <x̂, W> >= 0 on the basepoint side; scaled so violations are comparable.
double bisector_value(const MinkVector& w, const BallPoint& x) {
  return -mink_inner(hat(x), w) / w.norm();
}

BallPoint to_ball(const MinkVector& p) { return {p[0] / p[2], p[1] / p[2]}; }

}  // namespace

FundamentalPolygon FundamentalPolygon::dirichlet(const Lattice& lattice, int depth,
                                                 const BallPoint& basepoint) {
  if (depth < 1) throw DomainError("Dirichlet polygon needs words of length at least 1");
  if (basepoint.norm() >= 1.0) throw DomainError("basepoint must lie inside the ball");
  const auto elements = enumerate_elements(lattice, Cocycle::zero(lattice.rank()), depth);

  FundamentalPolygon poly;
  poly.basepoint_ = basepoint;
  poly.base_hyp_ = radial_map(basepoint);
  ConvexPolygon region = ConvexPolygon::circumscribed(1.0, 256, -1);
  for (std::size_t e = 1; e < elements.size(); ++e) {
    const MinkVector w = bisector_normal(poly.base_hyp_, elements[e].isometry.linear);
    if (w.norm() < 1e-9) throw DomainError("basepoint is fixed by a non-trivial element");
    region.clip(BallPoint(-w[0], -w[1]), -w[2], static_cast<int>(e));
  }
  if (region.empty() || region.has_label(-1)) {
    throw DomainError("word depth " + std::to_string(depth) + " does not close the Dirichlet polygon");
  }

  // Drop degenerate edges left by clipping through existing vertices.
  const std::size_t n = region.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const BallPoint& p = region.points[i];
    const BallPoint& q = region.points[(i + 1) % n];
    if ((q - p).norm() < 1e-12) continue;
    if (p.norm() >= 1.0) throw DomainError("Dirichlet polygon reaches the boundary: lattice not cocompact?");
    const auto& el = elements[static_cast<std::size_t>(region.labels[i])];
    poly.vertices_.push_back(p);
    poly.sides_.push_back({el.word, el.isometry.linear, -1});
  }

  const std::size_t m = poly.sides_.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Mat3 inv = lorentz_inverse(poly.sides_[k].linear);
    for (std::size_t j = 0; j < m; ++j) {
      const double scale = std::max(1.0, inv.cwiseAbs().maxCoeff());
      if ((poly.sides_[j].linear - inv).cwiseAbs().maxCoeff() <= 1e-8 * scale) {
        poly.sides_[k].partner = static_cast<int>(j);
        break;
      }
    }
    if (poly.sides_[k].partner < 0) {
      throw DomainError("side " + std::to_string(k) + " of the Dirichlet polygon has no partner; increase depth");
    }
  }
  return poly;
}

double FundamentalPolygon::side_value(std::size_t k, const BallPoint& x) const {
  return bisector_value(bisector_normal(base_hyp_, sides_[k].linear), x);
}

double FundamentalPolygon::violation(const BallPoint& x) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sides_.size(); ++k) worst = std::max(worst, side_value(k, x));
  return worst;
}

Reduction FundamentalPolygon::reduce(const BallPoint& x) const {
  if (x.norm() >= 1.0) throw DomainError("reduce: point outside the open ball");
  Reduction r{x, {}, Mat3::Identity()};
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t worst = 0;
    double v = -1.0;
    for (std::size_t k = 0; k < sides_.size(); ++k) {
      const double s = side_value(k, r.point);
      if (s > v) {
        v = s;
        worst = k;
      }
    }
    if (v <= 1e-14) return r;
    const PolygonSide& s = sides_[worst];
    r.point = projective_action(lorentz_inverse(s.linear), r.point);
    r.linear = r.linear * s.linear;
    r.word.insert(r.word.end(), s.word.begin(), s.word.end());
  }
  throw DomainError("reduce: no convergence (point too close to the ideal boundary)");
}

double FundamentalPolygon::pairing_defect() const {
  double worst = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Mat3 inv = lorentz_inverse(sides_[k].linear);
    const auto p = static_cast<std::size_t>(sides_[k].partner);
    const BallPoint a = projective_action(inv, vertices_[k]);
    const BallPoint b = projective_action(inv, vertices_[(k + 1) % n]);
    worst = std::max(worst, (a - vertices_[(p + 1) % n]).norm());
    worst = std::max(worst, (b - vertices_[p]).norm());
  }
  return worst;
}

double hyperbolic_angle(const BallPoint& a, const BallPoint& b, const BallPoint& c) {
  const MinkVector A = radial_map(a), B = radial_map(b), C = radial_map(c);
  const MinkVector u = A + mink_inner(A, B) * B;
  const MinkVector v = C + mink_inner(C, B) * B;
  const double cosang = mink_inner(u, v) / std::sqrt(mink_inner(u, u) * mink_inner(v, v));
  return std::acos(std::clamp(cosang, -1.0, 1.0));
}

double hyperbolic_polygon_area(const std::vector<BallPoint>& v) {
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  double angles = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    angles += hyperbolic_angle(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
  }
  return (static_cast<double>(n) - 2.0) * std::numbers::pi - angles;
}

double FundamentalPolygon::area() const { return hyperbolic_polygon_area(vertices_); }

QuotientMesh QuotientMesh::build(const FundamentalPolygon& poly, int m) {
  if (m < 1) throw std::invalid_argument("quotient mesh needs at least one subdivision");
  const std::size_t ns = poly.size();
  const MinkVector base = radial_map(poly.basepoint());
  QuotientMesh mesh;
  mesh.subdivisions = m;
  const auto stride = static_cast<std::size_t>(m + 1);
  auto local = [&](int j, int l) { return static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(l); };

  std::map<std::pair<long long, long long>, int> by_coord;
  auto node_at = [&](const MinkVector& P, bool side) {
    const BallPoint x = to_ball(P);
    const std::pair<long long, long long> key{std::llround(x[0] * 1e11), std::llround(x[1] * 1e11)};
    auto it = by_coord.find(key);
    if (it != by_coord.end()) return it->second;
    QuotientNode q;
    q.x = x;
    q.X = radial_map(x);
    q.on_side = side;
    mesh.nodes.push_back(q);
    by_coord.emplace(key, static_cast<int>(mesh.nodes.size() - 1));
    return static_cast<int>(mesh.nodes.size() - 1);
  };

  for (std::size_t k = 0; k < ns; ++k) {
    Mat3 frame;
    frame.col(0) = base;
    frame.col(1) = radial_map(poly.vertices()[k]);
    frame.col(2) = radial_map(poly.vertices()[(k + 1) % ns]);
    mesh.sector_frames.push_back(frame);
    std::vector<int> ids(stride * stride, -1);
    for (int j = 0; j <= m; ++j) {
      for (int l = 0; j + l <= m; ++l) {
        const MinkVector P = frame * MinkVector(m - j - l, j, l);
        ids[local(j, l)] = node_at(P, j + l == m);
      }
    }
    for (int j = 0; j < m; ++j) {
      for (int l = 0; j + l < m; ++l) {
        mesh.triangles.push_back({ids[local(j, l)], ids[local(j + 1, l)], ids[local(j, l + 1)]});
        if (j + l + 2 <= m) {
          mesh.triangles.push_back({ids[local(j + 1, l)], ids[local(j + 1, l + 1)], ids[local(j, l + 1)]});
        }
      }
    }
    mesh.sector_nodes.push_back(std::move(ids));
  }
  for (auto& t : mesh.triangles) {
    const BallPoint &a = mesh.nodes[t[0]].x, &b = mesh.nodes[t[1]].x, &c = mesh.nodes[t[2]].x;
    if (cross2(b - a, c - a) < 0.0) std::swap(t[1], t[2]);
  }

  // Identifications: node (k, j, l) on side k equals γ_k applied to node
  // (partner, l, j).
  struct Link {
    int to;
    Word word;
    Mat3 linear;
  };
  std::vector<std::vector<Link>> links(mesh.nodes.size());
  for (std::size_t k = 0; k < ns; ++k) {
    const PolygonSide& s = poly.sides()[k];
    const auto p = static_cast<std::size_t>(s.partner);
    const Mat3 inv = lorentz_inverse(s.linear);
    const Word inv_word = inverse_word(s.word);
    for (int j = 0; j <= m; ++j) {
      const int l = m - j;
      const int a = mesh.sector_nodes[k][local(j, l)];
      const int b = mesh.sector_nodes[p][local(l, j)];
      const BallPoint img = projective_action(inv, mesh.nodes[a].x);
      if ((img - mesh.nodes[b].x).norm() > 1e-8) {
        throw DomainError("quotient mesh: paired side nodes do not match");
      }
      links[b].push_back({a, s.word, s.linear});
      links[a].push_back({b, inv_word, inv});
    }
  }

  std::vector<bool> seen(mesh.nodes.size(), false);
  for (std::size_t start = 0; start < mesh.nodes.size(); ++start) {
    if (seen[start]) continue;
    const int rep = static_cast<int>(mesh.reps.size());
    mesh.reps.push_back(static_cast<int>(start));
    seen[start] = true;
    mesh.nodes[start].rep = rep;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (const Link& lk : links[static_cast<std::size_t>(a)]) {
        if (seen[static_cast<std::size_t>(lk.to)]) continue;
        seen[static_cast<std::size_t>(lk.to)] = true;
        QuotientNode& q = mesh.nodes[static_cast<std::size_t>(lk.to)];
        const QuotientNode& from = mesh.nodes[static_cast<std::size_t>(a)];
        q.rep = rep;
        q.linear = lk.linear * from.linear;
        q.word = lk.word;
        q.word.insert(q.word.end(), from.word.begin(), from.word.end());
        queue.push_back(lk.to);
      }
    }
  }

  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      mesh.max_edge = std::max(mesh.max_edge,
                               hyperbolic_distance(mesh.nodes[t[e]].X, mesh.nodes[t[(e + 1) % 3]].X));
    }
  }
  return mesh;
}

std::optional<QuotientMesh::Hit> QuotientMesh::locate(const BallPoint& x, double tol) const {
  const MinkVector xh = hat(x);
  int best = -1;
  double best_min = -std::numeric_limits<double>::infinity();
  MinkVector best_w;
  for (std::size_t k = 0; k < sector_frames.size(); ++k) {
    MinkVector w = sector_frames[k].partialPivLu().solve(xh);
    const double s = w.sum();
    if (!(s > 0.0)) continue;
    w /= s;
    const double mn = w.minCoeff();
    if (mn > best_min) {
      best_min = mn;
      best = static_cast<int>(k);
      best_w = w;
    }
  }
  if (best < 0 || best_min < -tol) return std::nullopt;
  const int m = subdivisions;
  const auto stride = static_cast<std::size_t>(m + 1);
  const double b = std::clamp(best_w[1], 0.0, 1.0) * m;
  const double c = std::clamp(best_w[2], 0.0, 1.0) * m;
  int j = std::min(static_cast<int>(std::floor(b)), m - 1);
  int l = std::min(static_cast<int>(std::floor(c)), m - 1);
  if (j + l > m - 1) {
    // on the outer side: pull back into the last row of cells
    if (b - j > c - l) l = m - 1 - j; else j = m - 1 - l;
    j = std::max(j, 0);
    l = std::max(l, 0);
  }
  const auto& ids = sector_nodes[static_cast<std::size_t>(best)];
  auto id = [&](int jj, int ll) { return ids[static_cast<std::size_t>(jj) * stride + static_cast<std::size_t>(ll)]; };
  Hit hit;
  if ((b - j) + (c - l) <= 1.0 || j + l + 2 > m) {
    hit.nodes = {id(j, l), id(j + 1, l), id(j, l + 1)};
  } else {
    hit.nodes = {id(j + 1, l), id(j + 1, l + 1), id(j, l + 1)};
  }
  const BallPoint &p0 = nodes[hit.nodes[0]].x, &p1 = nodes[hit.nodes[1]].x, &p2 = nodes[hit.nodes[2]].x;
  const double det = cross2(p1 - p0, p2 - p0);
  const double w1 = cross2(x - p0, p2 - p0) / det;
  const double w2 = cross2(p1 - p0, x - p0) / det;
  hit.bary = {1.0 - w1 - w2, w1, w2};
  return hit;
}

}  // namespace minkprob
