#include "aconvex/geom.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "aconvex/error.hpp"

namespace aconvex {

namespace {

// Window values within this distance are considered equal when choosing a
// witness (shortest, then earliest start).
constexpr double kTie = 1e-12;

struct Window {
  double value = 0.0;
  std::size_t length = 0;  // number of turn angles
  std::size_t start = 0;
};

bool better(const Window& a, const Window& b) {
  if (a.value < b.value - kTie) return true;
  if (a.value > b.value + kTie) return false;
  if (a.length != b.length) return a.length < b.length;
  return a.start < b.start;
}

void check_shift(const Shift& s) {
  if (!s.direction.finite() || !std::isfinite(s.length) || s.length < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "shift with non-finite or negative data");
  }
  if (std::abs(s.direction.norm() - 1.0) > kEpsUnit) {
    throw Error(ErrorCode::InvalidArgument, "shift direction is not a unit vector");
  }
  if (s.is_virtual != (s.length == 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "zero length is reserved for virtual shifts");
  }
}

}  // namespace

Vec2 normalized(Vec2 v) {
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  return v / n;
}

Vec2 rotated(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

bool is_opposite(Vec2 v, Vec2 w) {
  return dot(v, w) < 0.0 &&
         std::abs(skew(v, w)) <= kEpsAngle * v.norm() * w.norm();
}

double signed_angle(Vec2 v, Vec2 w) {
  if (v.norm() == 0.0 || w.norm() == 0.0) {
    throw Error(ErrorCode::ZeroVector, "signed angle of a zero vector");
  }
  if (is_opposite(v, w)) {
    throw Error(ErrorCode::OppositeVectors, "consecutive shifts are opposite");
  }
  return std::atan2(skew(v, w), dot(v, w));
}

double ccw_angle(Vec2 v, Vec2 w) {
  double a = std::atan2(skew(v, w), dot(v, w));
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

Shift Shift::of(Vec2 v) {
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "shift of zero length");
  return Shift{v / n, n, false};
}

Shift Shift::virtual_edge(Vec2 direction) {
  return Shift{normalized(direction), 0.0, true};
}

Polyline Polyline::from_vertices(std::vector<Vec2> vertices, bool closed) {
  if (closed && vertices.size() > 1 && vertices.front() == vertices.back()) {
    vertices.pop_back();
  }
  if (vertices.size() < (closed ? 3u : 2u)) {
    throw Error(ErrorCode::InvalidArgument, "too few vertices for a polyline");
  }
  for (const Vec2& v : vertices) {
    if (!v.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite vertex");
  }
  const std::size_t n = vertices.size();
  const std::size_t edges = closed ? n : n - 1;
  std::vector<Shift> shifts;
  shifts.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const Vec2 d = vertices[(i + 1) % n] - vertices[i];
    if (d.norm() == 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "consecutive vertices coincide at index " + std::to_string(i));
    }
    shifts.push_back(Shift::of(d));
  }
  return Polyline(std::move(vertices), std::move(shifts), closed);
}

Polyline Polyline::from_shifts(Vec2 start, std::vector<Shift> shifts,
                               bool closed) {
  if (!start.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite start");
  if (shifts.empty()) throw Error(ErrorCode::InvalidArgument, "empty shift sequence");
  std::vector<Vec2> vertices{start};
  vertices.reserve(shifts.size() + 1);
  for (const Shift& s : shifts) {
    check_shift(s);
    vertices.push_back(vertices.back() + s.vector());
  }
  if (closed) {
    const double tol = kEpsGeomRel * aconvex::diameter(vertices);
    if (distance(vertices.back(), start) > tol) {
      throw Error(ErrorCode::InvalidArgument, "closed shift sequence does not sum to zero");
    }
    vertices.pop_back();
  }
  return Polyline(std::move(vertices), std::move(shifts), closed);
}

Polyline Polyline::assemble(std::vector<Vec2> vertices, std::vector<Shift> shifts,
                            bool closed) {
  const std::size_t expected = closed ? shifts.size() : shifts.size() + 1;
  if (shifts.empty() || vertices.size() != expected) {
    throw Error(ErrorCode::InvalidArgument, "vertex and shift counts disagree");
  }
  for (const Shift& s : shifts) check_shift(s);
  for (const Vec2& v : vertices) {
    if (!v.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite vertex");
  }
  return Polyline(std::move(vertices), std::move(shifts), closed);
}

Vec2 Polyline::point_at(double t) const {
  const std::size_t n = shifts_.size();
  t = std::clamp(t, 0.0, 1.0);
  const double scaled = t * static_cast<double>(n);
  std::size_t i = static_cast<std::size_t>(scaled);
  if (i >= n) return end();
  const double local = scaled - static_cast<double>(i);
  const Vec2 a = edge_start(i);
  const Vec2 b = edge_end(i);
  return a + (b - a) * local;
}

double Polyline::diameter() const { return aconvex::diameter(vertices_); }

std::vector<double> turn_angles(const Polyline& p) {
  const auto shifts = p.shifts();
  const std::size_t n = shifts.size();
  std::vector<double> turns;
  if (n == 0) return turns;
  const std::size_t count = p.closed() ? n : n - 1;
  turns.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    turns.push_back(signed_angle(shifts[i].direction, shifts[(i + 1) % n].direction));
  }
  return turns;
}

double rot(const Polyline& p) {
  double total = 0.0;
  for (double t : turn_angles(p)) total += t;
  return total;
}

std::size_t AcoReport::turn_count(std::size_t shift_count, bool cyclic) const {
  if (cyclic) return (witness_end + shift_count - witness_start) % shift_count;
  return witness_end - witness_start;
}

AcoReport aco_open(const Polyline& p) {
  if (p.closed()) throw Error(ErrorCode::InvalidArgument, "aco_open needs an open chain");
  const std::vector<double> turns = turn_angles(p);
  // Minimum-sum window ending at turn j starts right after the largest
  // prefix sum seen so far (ties resolved towards the later prefix).
  Window best;
  double prefix = 0.0;
  double max_prefix = 0.0;
  std::size_t max_at = 0;
  for (std::size_t j = 0; j < turns.size(); ++j) {
    prefix += turns[j];
    const Window w{prefix - max_prefix, j + 1 - max_at, max_at};
    if (better(w, best)) best = w;
    if (prefix >= max_prefix - kTie) {
      max_prefix = prefix;
      max_at = j + 1;
    }
  }
  if (best.length == 0) return AcoReport{0.0, 0, 0};
  return AcoReport{best.value, best.start, best.start + best.length};
}

AcoReport aco_polygon(const Polygon& k) {
  const std::vector<double> turns = turn_angles(k.boundary());
  const std::size_t n = turns.size();
  // Cyclic minimum-sum window of at most n-1 turns over the doubled array.
  std::vector<double> prefix(2 * n, 0.0);
  for (std::size_t i = 1; i < 2 * n; ++i) prefix[i] = prefix[i - 1] + turns[(i - 1) % n];

  Window best;
  std::deque<std::size_t> maxima;  // window starts, prefix values decreasing
  for (std::size_t end = 1; end < 2 * n; ++end) {
    while (!maxima.empty() && prefix[maxima.back()] <= prefix[end - 1] + kTie) {
      maxima.pop_back();
    }
    maxima.push_back(end - 1);
    while (maxima.front() + (n - 1) < end) maxima.pop_front();
    const std::size_t start = maxima.front();
    const Window w{prefix[end] - prefix[start], end - start, start % n};
    if (better(w, best)) best = w;
  }
  if (best.length == 0) return AcoReport{0.0, 0, 0};
  return AcoReport{best.value, best.start, (best.start + best.length) % n};
}

namespace {

// Rotation of shifts [first, first + turns] (indices mod n), summed directly.
double arc_rotation(std::span<const Shift> shifts, std::size_t first,
                    std::size_t turns) {
  const std::size_t n = shifts.size();
  double total = 0.0;
  for (std::size_t k = 0; k < turns; ++k) {
    total += signed_angle(shifts[(first + k) % n].direction,
                          shifts[(first + k + 1) % n].direction);
  }
  return total;
}

}  // namespace

AcoReport aco_bruteforce(const Polyline& p) {
  const auto shifts = p.shifts();
  const std::size_t n = shifts.size();
  // Non-reverse check up front so errors match the fast path.
  (void)turn_angles(p);
  Window best;
  if (p.closed()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t len = 1; len + 1 <= n; ++len) {
        const Window w{arc_rotation(shifts, a, len), len, a};
        if (better(w, best)) best = w;
      }
    }
    if (best.length == 0) return AcoReport{0.0, 0, 0};
    return AcoReport{best.value, best.start, (best.start + best.length) % n};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Window w{arc_rotation(shifts, a, b - a), b - a, a};
      if (better(w, best)) best = w;
    }
  }
  if (best.length == 0) return AcoReport{0.0, 0, 0};
  return AcoReport{best.value, best.start, best.start + best.length};
}

AcoReport aco_bruteforce(const Polygon& k) { return aco_bruteforce(k.boundary()); }

double witness_rotation(const Polyline& p, const AcoReport& report) {
  const auto shifts = p.shifts();
  return arc_rotation(shifts, report.witness_start,
                      report.turn_count(shifts.size(), p.closed()));
}

SimplicityReport is_simple(const Polyline& p) {
  struct Edge {
    Vec2 a, b;
    double t0, t1;  // arc-length parameters of the endpoints
  };
  std::vector<Edge> edges;
  double total = 0.0;
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    if (p.shifts()[i].is_virtual) continue;
    const Vec2 a = p.edge_start(i);
    const Vec2 b = p.edge_end(i);
    edges.push_back({a, b, total, total + distance(a, b)});
    total += distance(a, b);
  }
  SimplicityReport report;
  if (edges.size() < 2 || total == 0.0) return report;
  const double eps = p.eps();
  const std::size_t m = edges.size();
  auto param = [&](const Edge& e, double u) { return (e.t0 + u * (e.t1 - e.t0)) / total; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = j == i + 1 || (p.closed() && i == 0 && j == m - 1);
      const auto hit = intersect_segments(edges[i].a, edges[i].b, edges[j].a,
                                          edges[j].b, eps);
      if (!hit) continue;
      if (adjacent && !hit->overlap) {
        // Must be the shared vertex and nothing else.
        const Vec2 shared = (j == i + 1) ? edges[i].b : edges[i].a;
        if (distance(hit->point, shared) <= eps) continue;
      }
      double u = hit->u;
      double v = hit->v;
      if (adjacent && hit->overlap) {
        // Report the far end of the folded-back part.
        if (j == i + 1) {
          v = 1.0;
          u = std::clamp(1.0 - distance(edges[j].a, edges[j].b) /
                                   std::max(distance(edges[i].a, edges[i].b), 1e-300),
                         0.0, 1.0);
        }
      }
      double t1 = param(edges[i], u);
      double t2 = param(edges[j], v);
      if (t1 > t2) std::swap(t1, t2);
      report.simple = false;
      report.intersections.emplace_back(t1, t2);
    }
  }
  return report;
}

double signed_area(std::span<const Vec2> ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) twice += skew(ring[i], ring[(i + 1) % n]);
  return 0.5 * twice;
}

double diameter(std::span<const Vec2> points) {
  if (points.empty()) return 0.0;
  double lo_x = points[0].x, hi_x = points[0].x, lo_y = points[0].y, hi_y = points[0].y;
  for (const Vec2& p : points) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double Polygon::vertex_turn(std::size_t i) const {
  return signed_angle(edge(i + size() - 1), edge(i));
}

Polygon Polygon::translated(Vec2 offset) const {
  std::vector<Vec2> moved(vertices().begin(), vertices().end());
  for (Vec2& v : moved) v += offset;
  return Polygon(Polyline::from_vertices(std::move(moved), true), area_);
}

Polygon orient_ccw(std::vector<Vec2> raw) {
  if (raw.size() > 1 && raw.front() == raw.back()) raw.pop_back();
  if (raw.size() < 3) {
    throw Error(ErrorCode::DegenerateArea, "a polygon needs at least 3 vertices");
  }
  for (const Vec2& v : raw) {
    if (!v.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite vertex");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == raw[(i + 1) % raw.size()]) {
      throw Error(ErrorCode::NotSimple, "repeated vertex at index " + std::to_string(i));
    }
  }
  {
    // All vertices on one line: the boundary folds onto itself, report the area.
    const double diam = diameter(raw);
    std::size_t far = 0;
    for (std::size_t i = 1; i < raw.size(); ++i) {
      if ((raw[i] - raw[0]).norm() > (raw[far] - raw[0]).norm()) far = i;
    }
    const Vec2 dir = raw[far] - raw[0];
    bool flat = true;
    for (const Vec2& v : raw) {
      if (std::abs(skew(dir, v - raw[0])) > kEpsGeomRel * diam * dir.norm()) flat = false;
    }
    if (flat) throw Error(ErrorCode::DegenerateArea, "all vertices are collinear");
  }
  Polyline ring = Polyline::from_vertices(raw, true);
  const SimplicityReport simple = is_simple(ring);
  if (!simple.simple) {
    throw Error(ErrorCode::NotSimple,
                "boundary self-intersects at t=" + std::to_string(simple.intersections[0].first) +
                    "," + std::to_string(simple.intersections[0].second));
  }
  const double area = signed_area(raw);
  const double diam = diameter(raw);
  if (std::abs(area) <= kEpsGeomRel * diam * diam) {
    throw Error(ErrorCode::DegenerateArea, "enclosed area is zero");
  }
  if (area < 0.0) {
    std::reverse(raw.begin() + 1, raw.end());
    ring = Polyline::from_vertices(std::move(raw), true);
  }
  return Polygon(std::move(ring), std::abs(area));
}

Polygon require_ccw(std::vector<Vec2> raw) {
  if (raw.size() > 1 && raw.front() == raw.back()) raw.pop_back();
  if (raw.size() >= 3 && signed_area(raw) < 0.0) {
    throw Error(ErrorCode::NotCCW, "boundary runs clockwise");
  }
  return orient_ccw(std::move(raw));
}

Polygon merge_collinear(const Polygon& k) {
  std::vector<Vec2> kept;
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 in = k.edge(i + n - 1);
    const Vec2 out = k.edge(i);
    const bool straight = dot(in, out) > 0.0 &&
                          std::abs(skew(in, out)) <= kEpsAngle * in.norm() * out.norm();
    if (!straight) kept.push_back(k.vertex(i));
  }
  return orient_ccw(std::move(kept));
}

bool is_convex(const Polygon& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k.vertex_turn(i) < -kEpsAngle) return false;
  }
  return true;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

Location locate(const Polygon& k, Vec2 p, double band) {
  const std::size_t n = k.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = k.vertex(i);
    const Vec2 b = k.vertex(i + 1);
    if (point_segment_distance(p, a, b) <= band) return Location::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

std::optional<SegmentHit> intersect_segments(Vec2 a, Vec2 b, Vec2 c, Vec2 d,
                                             double eps) {
  const Vec2 r = b - a;
  const Vec2 s = d - c;
  const double lr = r.norm();
  const double ls = s.norm();
  const Vec2 qp = c - a;
  const double denom = skew(r, s);
  if (lr == 0.0 || ls == 0.0) {
    // Degenerate segment: treat as a point.
    const Vec2 pt = lr == 0.0 ? a : c;
    const Vec2 o0 = lr == 0.0 ? c : a;
    const Vec2 o1 = lr == 0.0 ? d : b;
    if (point_segment_distance(pt, o0, o1) > eps) return std::nullopt;
    const Vec2 oo = o1 - o0;
    const double w = dot(oo, oo) == 0.0 ? 0.0 : std::clamp(dot(pt - o0, oo) / dot(oo, oo), 0.0, 1.0);
    return lr == 0.0 ? SegmentHit{0.0, w, pt, false} : SegmentHit{w, 0.0, pt, false};
  }
  const bool parallel = std::abs(denom) <= 1e-12 * lr * ls;
  if (!parallel) {
    double u = skew(qp, s) / denom;
    double v = skew(qp, r) / denom;
    const double tu = eps / lr;
    const double tv = eps / ls;
    if (u < -tu || u > 1.0 + tu || v < -tv || v > 1.0 + tv) {
      // Near-touching endpoints of almost parallel segments can land just
      // outside the tolerance window in parameter space; fall back to
      // endpoint distances.
      const double gap = std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
      if (gap > eps) return std::nullopt;
    }
    const bool interior = u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0;
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    const Vec2 pu = a + r * u;
    const Vec2 pv = c + s * v;
    if (!interior && distance(pu, pv) > eps) {
      // Closest approach is at an endpoint; recompute there.
      struct Cand { double dist; double u; double v; Vec2 pt; };
      auto proj = [](Vec2 p, Vec2 o, Vec2 dir) {
        return std::clamp(dot(p - o, dir) / dot(dir, dir), 0.0, 1.0);
      };
      const Cand cands[] = {
          {point_segment_distance(a, c, d), 0.0, proj(a, c, s), a},
          {point_segment_distance(b, c, d), 1.0, proj(b, c, s), b},
          {point_segment_distance(c, a, b), proj(c, a, r), 0.0, c},
          {point_segment_distance(d, a, b), proj(d, a, r), 1.0, d},
      };
      const Cand* best = &cands[0];
      for (const Cand& cand : cands) {
        if (cand.dist < best->dist) best = &cand;
      }
      if (best->dist > eps) return std::nullopt;
      return SegmentHit{best->u, best->v, best->pt, false};
    }
    return SegmentHit{u, v, pu, false};
  }
  if (std::abs(skew(r, qp)) / lr > eps) return std::nullopt;
  const double r2 = dot(r, r);
  const double t0 = dot(qp, r) / r2;
  const double t1 = dot(d - a, r) / r2;
  const double lo = std::max(0.0, std::min(t0, t1));
  const double hi = std::min(1.0, std::max(t0, t1));
  const double tol = eps / lr;
  if (lo > hi + tol) return std::nullopt;
  const double u = std::clamp(lo, 0.0, 1.0);
  const Vec2 pt = a + r * u;
  const double v = std::clamp(dot(pt - c, s) / dot(s, s), 0.0, 1.0);
  return SegmentHit{u, v, pt, hi - lo > tol};
}

}  // namespace aconvex
