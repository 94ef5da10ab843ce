#include "minkprob/lower_hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minkprob {

namespace {

constexpr double kBaryTol = 1e-11;

}  // namespace

LowerHull::LowerHull(std::span<const Vec2> points, std::span<const double> heights, double height_tol)
    : points_(points.begin(), points.end()), heights_(heights.begin(), heights.end()) {
  if (points_.size() != heights_.size()) throw std::invalid_argument("LowerHull: size mismatch");
  if (points_.size() < 3) throw std::invalid_argument("LowerHull: need at least three points");
  double zmax = 1.0;
  for (double z : heights_) {
    if (!std::isfinite(z)) throw std::invalid_argument("LowerHull: non-finite height");
    zmax = std::max(zmax, std::abs(z));
  }
  eps_ = height_tol * zmax;
  double ext = 0.0;
  for (const auto& p : points_) ext = std::max(ext, p.cwiseAbs().maxCoeff());
  area_eps_ = 1e-15 * std::max(1.0, ext * ext);
  build();
}

double LowerHull::orient(int a, int b, int c) const {
  return cross2(points_[b] - points_[a], points_[c] - points_[a]);
}

double LowerHull::orient_point(int a, int b, const Vec2& p) const {
  return cross2(points_[b] - points_[a], p - points_[a]);
}

double LowerHull::plane_at(int t, const Vec2& x) const {
  const auto& v = tris_[t].v;
  const double total = orient(v[0], v[1], v[2]);
  const double l0 = orient_point(v[1], v[2], x) / total;
  const double l1 = orient_point(v[2], v[0], x) / total;
  const double l2 = 1.0 - l0 - l1;
  return l0 * heights_[v[0]] + l1 * heights_[v[1]] + l2 * heights_[v[2]];
}

int LowerHull::edge_slot(int t, int a, int b) const {
  const auto& v = tris_[t].v;
  for (int k = 0; k < 3; ++k) {
    const int x = v[(k + 1) % 3], y = v[(k + 2) % 3];
    if ((x == a && y == b) || (x == b && y == a)) return k;
  }
  return -1;
}

void LowerHull::set_neighbor(int t, int a, int b, int value) {
  if (t < 0) return;
  const int k = edge_slot(t, a, b);
  if (k < 0) throw std::logic_error("LowerHull: broken adjacency");
  tris_[t].nb[k] = value;
}

void LowerHull::build() {
  const int n = static_cast<int>(points_.size());
  // Convex hull of the projections: strictly convex vertices, ccw.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return points_[a][0] < points_[b][0] || (points_[a][0] == points_[b][0] && points_[a][1] < points_[b][1]);
  });
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i : idx) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], i) <= area_eps_) --k;
    hull[k++] = i;
  }
  for (int j = n - 2, t = k + 1; j >= 0; --j) {
    const int i = idx[j];
    while (k >= t && orient(hull[k - 2], hull[k - 1], i) <= area_eps_) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw std::invalid_argument("LowerHull: points are collinear");

  vertex_.assign(n, false);
  vertex_tri_.assign(n, -1);
  // Fan triangulation from hull[0].
  const int h = static_cast<int>(hull.size());
  for (int i = 1; i + 1 < h; ++i) {
    Triangle t;
    t.v = {hull[0], hull[i], hull[i + 1]};
    t.nb = {-1, -1, -1};
    tris_.push_back(t);
  }
  for (int i = 0; i + 1 < static_cast<int>(tris_.size()); ++i) {
    // triangle i and i+1 share the edge (hull[0], hull[i+2])
    tris_[i].nb[1] = i + 1;       // opposite v[1]=hull[i+1]: edge (hull[i+2], hull[0])
    tris_[i + 1].nb[2] = i;       // opposite v[2]=hull[i+2]: edge (hull[0], hull[i+1])
  }
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    for (int v : tris_[t].v) {
      vertex_[v] = true;
      vertex_tri_[v] = t;
    }
  }
  legalize_all();

  std::vector<bool> in_hull(n, false);
  for (int v : hull) in_hull[v] = true;
  for (int i : idx) {
    if (!in_hull[i]) insert(i);
  }
  legalize_all();
  finalize();
}

int LowerHull::locate(const Vec2& x) const {
  int t = last_located_;
  if (t < 0 || t >= static_cast<int>(tris_.size()) || !tris_[t].alive) {
    t = 0;
    while (!tris_[t].alive) ++t;
  }
  const std::size_t max_steps = 4 * tris_.size() + 16;
  unsigned salt = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto& tri = tris_[t];
    const int start = static_cast<int>((salt++ * 2654435761u) % 3);
    bool moved = false;
    for (int j = 0; j < 3; ++j) {
      const int k = (start + j) % 3;
      const int a = tri.v[(k + 1) % 3], b = tri.v[(k + 2) % 3];
      const double len2 = (points_[b] - points_[a]).squaredNorm();
      if (orient_point(a, b, x) < -kBaryTol * len2) {
        if (tri.nb[k] < 0) return -1;
        t = tri.nb[k];
        moved = true;
        break;
      }
    }
    if (!moved) {
      last_located_ = t;
      return t;
    }
  }
  // Walk did not settle (can happen on regular triangulations); scan.
  int best = -1;
  double best_score = -1e300;
  for (int s = 0; s < static_cast<int>(tris_.size()); ++s) {
    if (!tris_[s].alive) continue;
    const auto& v = tris_[s].v;
    const double total = orient(v[0], v[1], v[2]);
    const double l0 = orient_point(v[1], v[2], x) / total;
    const double l1 = orient_point(v[2], v[0], x) / total;
    const double score = std::min({l0, l1, 1.0 - l0 - l1});
    if (score > best_score) {
      best_score = score;
      best = s;
    }
  }
  if (best_score < -1e-9) return -1;
  last_located_ = best;
  return best;
}

double LowerHull::reflex_amount(int t, int k) const {
  const int u = tris_[t].nb[k];
  if (u < 0) return 0.0;
  const int a = tris_[t].v[(k + 1) % 3], b = tris_[t].v[(k + 2) % 3];
  const auto& uv = tris_[u].v;
  int q = -1;
  for (int v : uv) {
    if (v != a && v != b) q = v;
  }
  return plane_at(t, points_[q]) - heights_[q];
}

bool LowerHull::reflex(int t, int k) const { return reflex_amount(t, k) > eps_; }

void LowerHull::flip22(int t, int k) {
  const int u = tris_[t].nb[k];
  const int p = tris_[t].v[k], a = tris_[t].v[(k + 1) % 3], b = tris_[t].v[(k + 2) % 3];
  const int ku = edge_slot(u, a, b);
  const int q = tris_[u].v[ku];
  const int n_pa = tris_[t].nb[(k + 2) % 3];  // opposite b: edge (p, a)
  const int n_bp = tris_[t].nb[(k + 1) % 3];  // opposite a: edge (b, p)
  const int n_aq = tris_[u].nb[edge_slot(u, a, q)];
  const int n_qb = tris_[u].nb[edge_slot(u, q, b)];

  tris_[t].v = {p, a, q};
  tris_[t].nb = {n_aq, u, n_pa};
  tris_[u].v = {p, q, b};
  tris_[u].nb = {n_qb, n_bp, t};
  set_neighbor(n_aq, a, q, t);
  set_neighbor(n_bp, b, p, u);
  vertex_tri_[p] = t;
  vertex_tri_[a] = t;
  vertex_tri_[q] = t;
  vertex_tri_[b] = u;
}

std::vector<int> LowerHull::star(std::size_t vertex) const {
  std::vector<int> out;
  const int r = static_cast<int>(vertex);
  const int start = vertex_tri_[r];
  if (start < 0 || !vertex_[r]) return out;
  // counter-clockwise from start
  int t = start;
  bool closed = false;
  while (true) {
    out.push_back(t);
    const auto& tri = tris_[t];
    int k = 0;
    while (tri.v[k] != r) ++k;
    const int next = tri.nb[(k + 1) % 3];  // across edge (v[k+2], r)
    if (next < 0) break;
    if (next == start) {
      closed = true;
      break;
    }
    t = next;
    if (out.size() > tris_.size()) throw std::logic_error("LowerHull: star traversal did not close");
  }
  if (closed) return out;
  // open fan (boundary vertex): walk clockwise from start
  std::vector<int> back;
  t = start;
  while (true) {
    const auto& tri = tris_[t];
    int k = 0;
    while (tri.v[k] != r) ++k;
    const int prev = tri.nb[(k + 2) % 3];  // across edge (r, v[k+1])
    if (prev < 0) break;
    back.push_back(prev);
    t = prev;
    if (back.size() > tris_.size()) throw std::logic_error("LowerHull: star traversal did not close");
  }
  std::reverse(back.begin(), back.end());
  back.insert(back.end(), out.begin(), out.end());
  return back;
}

void LowerHull::remove_degree3(int r) {
  const auto st = star(static_cast<std::size_t>(r));
  if (st.size() != 3) throw std::logic_error("LowerHull: vertex is not of degree three");
  // ring vertices in ccw order and the outer neighbours
  std::array<int, 3> ring{}, outer{};
  for (int i = 0; i < 3; ++i) {
    const auto& tri = tris_[st[i]];
    int k = 0;
    while (tri.v[k] != r) ++k;
    ring[i] = tri.v[(k + 1) % 3];
    outer[i] = tri.nb[k];
  }
  const int keep = st[0];
  tris_[st[1]].alive = false;
  tris_[st[2]].alive = false;
  // triangle i of the star is (r, ring[i], ring[i+1]); the new triangle keeps
  // the edges (ring[i], ring[i+1]).
  tris_[keep].v = {ring[0], ring[1], ring[2]};
  // opposite ring[0] is edge (ring[1], ring[2]) = outer of star triangle 1, etc.
  tris_[keep].nb = {outer[1], outer[2], outer[0]};
  set_neighbor(outer[0], ring[0], ring[1], keep);
  set_neighbor(outer[1], ring[1], ring[2], keep);
  set_neighbor(outer[2], ring[2], ring[0], keep);
  for (int v : ring) vertex_tri_[v] = keep;
  vertex_[r] = false;
  vertex_tri_[r] = -1;
}

bool LowerHull::interior_degree3(int r) const {
  const auto st = star(static_cast<std::size_t>(r));
  if (st.size() != 3) return false;
  for (int t : st) {
    int k = 0;
    while (tris_[t].v[k] != r) ++k;
    if (tris_[t].nb[(k + 1) % 3] < 0 || tris_[t].nb[(k + 2) % 3] < 0) return false;
  }
  return true;
}

bool LowerHull::try_fix_edge(int t, int k, std::vector<std::pair<int, int>>* stack) {
  if (!reflex(t, k)) return false;
  const int u = tris_[t].nb[k];
  const int p = tris_[t].v[k], a = tris_[t].v[(k + 1) % 3], b = tris_[t].v[(k + 2) % 3];
  const int q = tris_[u].v[edge_slot(u, a, b)];
  const double o1 = orient(p, a, q), o2 = orient(p, q, b);
  if (o1 > area_eps_ && o2 > area_eps_) {
    flip22(t, k);
    if (stack) {
      stack->emplace_back(a, q);
      stack->emplace_back(q, b);
    }
    return true;
  }
  // Non-convex quadrilateral: the reflex corner can only go if it has degree
  // three, or degree four when it lies on the segment pq.
  const int r = (o1 <= area_eps_) ? a : b;
  const int other = (r == a) ? b : a;
  if (interior_degree3(r)) {
    remove_degree3(r);
    if (stack) stack->emplace_back(q, other);
    return true;
  }
  const double o = (r == a) ? o1 : o2;
  if (std::abs(o) <= area_eps_ && remove_on_segment(r, p, q)) {
    if (stack) {
      stack->emplace_back(q, other);
      for (int s : star(static_cast<std::size_t>(p))) {
        int k2 = 0;
        while (tris_[s].v[k2] != p) ++k2;
        stack->emplace_back(tris_[s].v[(k2 + 1) % 3], tris_[s].v[(k2 + 2) % 3]);
      }
    }
    return true;
  }
  return false;
}

bool LowerHull::remove_on_segment(int r, int p, int q) {
  const auto st = star(static_cast<std::size_t>(r));
  if (st.size() != 4) return false;
  std::array<int, 4> ring{}, outer{};
  for (int i = 0; i < 4; ++i) {
    const auto& tri = tris_[st[i]];
    int k = 0;
    while (tri.v[k] != r) ++k;
    if (tri.nb[(k + 1) % 3] < 0 || tri.nb[(k + 2) % 3] < 0) return false;
    ring[i] = tri.v[(k + 1) % 3];
    outer[i] = tri.nb[k];
  }
  int k = -1;
  for (int i = 0; i < 4; ++i)
    if ((ring[i] == p && ring[(i + 2) % 4] == q) || (ring[i] == q && ring[(i + 2) % 4] == p)) k = i;
  if (k < 0) return false;
  const int n0 = ring[k], n1 = ring[(k + 1) % 4], n2 = ring[(k + 2) % 4], n3 = ring[(k + 3) % 4];
  if (orient(n0, n1, n2) <= area_eps_ || orient(n2, n3, n0) <= area_eps_) return false;
  const int A = st[0], B = st[1];
  tris_[st[2]].alive = false;
  tris_[st[3]].alive = false;
  tris_[A].v = {n0, n1, n2};
  tris_[A].nb = {outer[(k + 1) % 4], B, outer[k]};
  tris_[B].v = {n2, n3, n0};
  tris_[B].nb = {outer[(k + 3) % 4], A, outer[(k + 2) % 4]};
  set_neighbor(outer[k], n0, n1, A);
  set_neighbor(outer[(k + 1) % 4], n1, n2, A);
  set_neighbor(outer[(k + 2) % 4], n2, n3, B);
  set_neighbor(outer[(k + 3) % 4], n3, n0, B);
  vertex_tri_[n0] = A;
  vertex_tri_[n1] = A;
  vertex_tri_[n2] = A;
  vertex_tri_[n3] = B;
  vertex_[r] = false;
  vertex_tri_[r] = -1;
  return true;
}

void LowerHull::insert(int p) {
  const Vec2& x = points_[p];
  const int t = locate(x);
  if (t < 0) return;  // outside the hull of the projections: impossible for non-hull points
  if (heights_[p] >= plane_at(t, x) - eps_) return;  // hidden

  const auto v = tris_[t].v;
  const auto nb = tris_[t].nb;
  const double total = orient(v[0], v[1], v[2]);
  std::array<double, 3> l{};
  l[0] = orient_point(v[1], v[2], x) / total;
  l[1] = orient_point(v[2], v[0], x) / total;
  l[2] = 1.0 - l[0] - l[1];
  int zero_slot = -1, zeros = 0;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(l[k]) <= kBaryTol) {
      zero_slot = k;
      ++zeros;
    }
  }
  if (zeros >= 2) return;  // coincides with a vertex

  vertex_[p] = true;
  std::vector<std::pair<int, int>> stack;
  auto new_tri = [&]() {
    tris_.push_back(Triangle{});
    return static_cast<int>(tris_.size()) - 1;
  };

  if (zeros == 0) {
    const int a = v[0], b = v[1], c = v[2];
    const int t0 = t, t1 = new_tri(), t2 = new_tri();
    tris_[t0].v = {p, b, c};
    tris_[t0].nb = {nb[0], t1, t2};
    tris_[t1].v = {p, c, a};
    tris_[t1].nb = {nb[1], t2, t0};
    tris_[t2].v = {p, a, b};
    tris_[t2].nb = {nb[2], t0, t1};
    set_neighbor(nb[1], c, a, t1);
    set_neighbor(nb[2], a, b, t2);
    vertex_tri_[p] = t0;
    vertex_tri_[a] = t1;
    vertex_tri_[b] = t0;
    vertex_tri_[c] = t0;
    stack = {{b, c}, {c, a}, {a, b}};
  } else {
    // p lies on the edge (b, c) opposite a
    const int k = zero_slot;
    const int a = v[k], b = v[(k + 1) % 3], c = v[(k + 2) % 3];
    const int n_ab = nb[(k + 2) % 3], n_ca = nb[(k + 1) % 3];
    const int u = nb[k];
    const int t0 = t, t1 = new_tri();
    if (u < 0) {
      tris_[t0].v = {a, b, p};
      tris_[t0].nb = {-1, t1, n_ab};
      tris_[t1].v = {a, p, c};
      tris_[t1].nb = {-1, n_ca, t0};
      set_neighbor(n_ca, c, a, t1);
      stack = {{a, b}, {c, a}};
    } else {
      const int ku = edge_slot(u, b, c);
      const int d = tris_[u].v[ku];
      const int n_cd = tris_[u].nb[edge_slot(u, c, d)], n_db = tris_[u].nb[edge_slot(u, d, b)];
      const int u0 = u, u1 = new_tri();
      // (a,b,p) (a,p,c) (d,c,p) (d,p,b)
      tris_[t0].v = {a, b, p};
      tris_[t0].nb = {u1, t1, n_ab};
      tris_[t1].v = {a, p, c};
      tris_[t1].nb = {u0, n_ca, t0};
      tris_[u0].v = {d, c, p};
      tris_[u0].nb = {t1, u1, n_cd};
      tris_[u1].v = {d, p, b};
      tris_[u1].nb = {t0, n_db, u0};
      set_neighbor(n_ca, c, a, t1);
      set_neighbor(n_db, d, b, u1);
      vertex_tri_[d] = u0;
      stack = {{a, b}, {c, a}, {c, d}, {d, b}};
    }
    vertex_tri_[p] = t0;
    vertex_tri_[a] = t0;
    vertex_tri_[b] = t0;
    vertex_tri_[c] = t1;
  }

  // A reflex link edge whose quadrilateral is not convex may only become
  // flippable after other link edges have been fixed, so rescan the link until
  // nothing changes.
  while (true) {
    while (!stack.empty()) {
      const auto [ex, ey] = stack.back();
      stack.pop_back();
      for (int s : star(static_cast<std::size_t>(p))) {
        const int k = edge_slot(s, ex, ey);
        if (k >= 0 && tris_[s].v[k] == p) {
          try_fix_edge(s, k, &stack);
          break;
        }
      }
    }
    bool changed = false;
    for (int s : star(static_cast<std::size_t>(p))) {
      int k = 0;
      while (tris_[s].v[k] != p) ++k;
      if (try_fix_edge(s, k, &stack)) {
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
}

void LowerHull::legalize_all() {
  for (int pass = 0; pass < 200; ++pass) {
    bool changed = false;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      for (int k = 0; k < 3 && tris_[t].alive; ++k) {
        if (tris_[t].nb[k] >= 0 && try_fix_edge(t, k, nullptr)) changed = true;
      }
    }
    if (!changed) return;
  }
}

void LowerHull::compact() {
  std::vector<int> remap(tris_.size(), -1);
  std::vector<Triangle> kept;
  for (std::size_t t = 0; t < tris_.size(); ++t) {
    if (!tris_[t].alive) continue;
    remap[t] = static_cast<int>(kept.size());
    kept.push_back(tris_[t]);
  }
  for (auto& tri : kept) {
    for (int& n : tri.nb) n = n < 0 ? -1 : remap[n];
  }
  tris_ = std::move(kept);
  last_located_ = 0;
}

void LowerHull::finalize() {
  compact();
  const std::size_t n = points_.size();
  vertex_.assign(n, false);
  boundary_.assign(n, false);
  vertex_tri_.assign(n, -1);
  gradients_.assign(tris_.size(), Vec2::Zero());
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    const auto& tri = tris_[t];
    for (int k = 0; k < 3; ++k) {
      vertex_[tri.v[k]] = true;
      vertex_tri_[tri.v[k]] = t;
      if (tri.nb[k] < 0) {
        boundary_[tri.v[(k + 1) % 3]] = true;
        boundary_[tri.v[(k + 2) % 3]] = true;
      }
    }
    const Vec2 e1 = points_[tri.v[1]] - points_[tri.v[0]];
    const Vec2 e2 = points_[tri.v[2]] - points_[tri.v[0]];
    Eigen::Matrix2d m;
    m << e1.transpose(), e2.transpose();
    const Vec2 dz(heights_[tri.v[1]] - heights_[tri.v[0]], heights_[tri.v[2]] - heights_[tri.v[0]]);
    gradients_[t] = m.partialPivLu().solve(dz);
  }
  envelope_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vertex_[i]) {
      envelope_[i] = heights_[i];
    } else {
      const int t = locate(points_[i]);
      envelope_[i] = t < 0 ? heights_[i] : std::min(heights_[i], plane_at(t, points_[i]));
    }
  }
}

double LowerHull::evaluate(const Vec2& x) const {
  const int t = locate(x);
  if (t < 0) throw std::domain_error("LowerHull::evaluate: point outside the hull of the nodes");
  return plane_at(t, x);
}

std::vector<std::array<int, 3>> LowerHull::triangles() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(tris_.size());
  for (const auto& t : tris_) out.push_back(t.v);
  return out;
}

std::vector<Vec2> LowerHull::subdifferential(std::size_t vertex, double merge_tol) const {
  if (!vertex_[vertex] || boundary_[vertex]) return {};
  std::vector<Vec2> g;
  for (int t : star(vertex)) g.push_back(gradients_[t]);
  return convex_hull_2d(std::move(g), merge_tol);
}

double LowerHull::subdifferential_area(std::size_t vertex, double merge_tol) const {
  const auto poly = subdifferential(vertex, merge_tol);
  return poly.size() < 3 ? 0.0 : std::abs(signed_area(poly));
}

std::vector<LowerHull::DualEdge> LowerHull::dual_edges() const {
  std::vector<DualEdge> out;
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int u = tris_[t].nb[k];
      if (u <= t) continue;
      out.push_back({tris_[t].v[(k + 1) % 3], tris_[t].v[(k + 2) % 3],
                     (gradients_[t] - gradients_[u]).norm()});
    }
  }
  return out;
}

double LowerHull::max_reflex_defect() const {
  double worst = 0.0;
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    if (!tris_[t].alive) continue;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, reflex_amount(t, k));
  }
  return worst;
}

std::size_t LowerHull::reflex_edge_count() const {
  std::size_t count = 0;
  for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
    for (int k = 0; k < 3; ++k) {
      if (tris_[t].nb[k] > t && reflex(t, k)) ++count;
    }
  }
  return count;
}

}  // namespace minkprob
