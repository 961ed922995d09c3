#include "convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "aconvex/error.hpp"

namespace aconvex::detail {

namespace {

double angle_between(Vec2 from, Vec2 to) { return std::atan2(skew(from, to), dot(from, to)); }

void add_sums(const Polygon& edges_of, const Polygon& verts_of, std::vector<Segment>& out) {
  const std::size_t n = verts_of.size();
  const std::size_t m = edges_of.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2 in = verts_of.edge(j + n - 1);
    const Vec2 leave = verts_of.edge(j);
    const double cone = angle_between(in, leave);
    if (cone < -kEpsAngle) continue;
    const Vec2 b = verts_of.vertex(j);
    for (std::size_t i = 0; i < m; ++i) {
      const double a = angle_between(in, edges_of.edge(i));
      if (a < -kEpsAngle || a > cone + kEpsAngle) continue;
      out.push_back({edges_of.vertex(i) + b, edges_of.vertex(i + 1) + b});
    }
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  // Keeps the smaller index as root so roots prefer segment endpoints.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

double param_on(Vec2 p, const Segment& s) {
  const Vec2 d = s.b - s.a;
  return dot(p - s.a, d) / dot(d, d);
}

double ccw_from(double base, double angle) {
  double a = angle - base;
  while (a <= 0.0) a += 2.0 * kPi;
  while (a > 2.0 * kPi) a -= 2.0 * kPi;
  return a;
}

}  // namespace

std::vector<Segment> reduced_convolution(const Polygon& k, const Polygon& l) {
  std::vector<Segment> out;
  add_sums(k, l, out);
  add_sums(l, k, out);
  std::erase_if(out, [](const Segment& s) { return s.a == s.b; });
  return out;
}

std::vector<Vec2> outer_face(const std::vector<Segment>& segments, double tol) {
  const std::size_t count = segments.size();
  if (count == 0) throw Error(ErrorCode::InternalInconsistency, "no convolution segments");

  // Points 2s and 2s+1 are the ends of segment s; crossings follow.
  std::vector<Vec2> points;
  points.reserve(2 * count);
  for (const Segment& s : segments) {
    points.push_back(s.a);
    points.push_back(s.b);
  }
  const std::size_t end_points = points.size();
  std::vector<std::vector<std::pair<double, std::size_t>>> marks(count);
  for (std::size_t s = 0; s < count; ++s) {
    marks[s].emplace_back(0.0, 2 * s);
    marks[s].emplace_back(1.0, 2 * s + 1);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const Segment& si = segments[i];
    for (std::size_t j = i + 1; j < count; ++j) {
      const Segment& sj = segments[j];
      const auto hit = intersect_segments(si.a, si.b, sj.a, sj.b, tol);
      if (!hit) continue;
      if (!hit->overlap) {
        points.push_back(hit->point);
        marks[i].emplace_back(hit->u, points.size() - 1);
        marks[j].emplace_back(hit->v, points.size() - 1);
        continue;
      }
      for (std::size_t e = 0; e < 2; ++e) {
        const Vec2 pj = e == 0 ? sj.a : sj.b;
        if (point_segment_distance(pj, si.a, si.b) <= tol) {
          marks[i].emplace_back(param_on(pj, si), 2 * j + e);
        }
        const Vec2 pi = e == 0 ? si.a : si.b;
        if (point_segment_distance(pi, sj.a, sj.b) <= tol) {
          marks[j].emplace_back(param_on(pi, sj), 2 * i + e);
        }
      }
    }
  }

  UnionFind clusters(points.size());
  std::vector<std::size_t> by_x(points.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return points[a].x < points[b].x || (points[a].x == points[b].x && a < b);
  });
  for (std::size_t i = 0; i < by_x.size(); ++i) {
    for (std::size_t j = i + 1; j < by_x.size(); ++j) {
      if (points[by_x[j]].x - points[by_x[i]].x > tol) break;
      if (distance(points[by_x[i]], points[by_x[j]]) <= tol) clusters.unite(by_x[i], by_x[j]);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto& m : marks) {
    std::sort(m.begin(), m.end());
    for (std::size_t t = 0; t + 1 < m.size(); ++t) {
      const std::size_t a = clusters.find(m[t].second);
      const std::size_t b = clusters.find(m[t + 1].second);
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::vector<std::vector<std::size_t>> around(points.size());
  for (const auto& [a, b] : edges) {
    around[a].push_back(b);
    around[b].push_back(a);
  }

  std::size_t start = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (clusters.find(i) != i || around[i].empty()) continue;
    if (start == points.size() || points[i].y < points[start].y ||
        (points[i].y == points[start].y && points[i].x < points[start].x)) {
      start = i;
    }
  }
  auto heading = [&](std::size_t from, std::size_t to) {
    const Vec2 d = points[to] - points[from];
    return std::atan2(d.y, d.x);
  };
  std::size_t first = around[start].front();
  // Nothing lies below the start, so headings fall in [0, pi].
  for (std::size_t w : around[start]) {
    if (heading(start, w) < heading(start, first)) first = w;
  }

  // Walk with the unbounded face on the right: at each point take the first
  // edge counterclockwise from the way back.
  std::vector<std::size_t> ring{start};
  std::size_t prev = start;
  std::size_t cur = first;
  const std::size_t limit = 2 * edges.size() + 4;
  for (std::size_t step = 0;; ++step) {
    if (step > limit) throw Error(ErrorCode::InternalInconsistency, "outer face walk does not close");
    const double back = heading(cur, prev);
    std::size_t next = prev;
    double best = 4.0 * kPi;
    for (std::size_t w : around[cur]) {
      const double a = ccw_from(back, heading(cur, w));
      if (a < best) {
        best = a;
        next = w;
      }
    }
    if (cur == start && next == first) break;
    ring.push_back(cur);
    prev = cur;
    cur = next;
  }

  // Crossing points in the middle of a straight run carry no corner.
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const std::size_t id = ring[i];
    const Vec2 p = points[id];
    const Vec2 before = out.empty() ? points[ring.back()] : out.back();
    const Vec2 after = points[ring[(i + 1) % ring.size()]];
    if (id >= end_points && point_segment_distance(p, before, after) <= tol) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace aconvex::detail
