#include "aconvex/minkowski.hpp"

#include <algorithm>
#include <string>

#include "aconvex/error.hpp"
#include "aconvex/simplify.hpp"
#include "convolution.hpp"

namespace aconvex {

namespace {

constexpr Vec2 kRight{1.0, 0.0};

std::size_t lowest_vertex(std::span<const Vec2> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
  }
  return best;
}

bool points_right(Vec2 d) {
  return dot(d, kRight) > 0.0 && std::abs(skew(kRight, d)) <= kEpsAngle * d.norm();
}

// Drops repeated vertices and spikes (edges that fold straight back) from a
// closed ring until none remain.
std::vector<Vec2> clean_ring(std::vector<Vec2> ring, double eps) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
      const std::size_t n = ring.size();
      const Vec2 prev = ring[(i + n - 1) % n];
      const Vec2 cur = ring[i];
      const Vec2 next = ring[(i + 1) % n];
      if (distance(prev, cur) <= eps) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (is_opposite(cur - prev, next - cur)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

// Puts a loop-eliminated chain computed on perturbed vertices back onto the
// unperturbed geometry: input vertices map to themselves, crossings to the
// intersection of the supporting lines of the two input edges.
std::vector<Vec2> snap_back(const LoopElimination& traced, const Polyline& original) {
  std::vector<Vec2> out;
  const auto verts = traced.chain.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const VertexOrigin& o = traced.origins[i];
    if (!o.crossing) {
      out.push_back(original.vertices()[o.vertex]);
      continue;
    }
    const Vec2 a = original.edge_start(o.edge_in);
    const Vec2 r = original.edge_end(o.edge_in) - a;
    const Vec2 c = original.edge_start(o.edge_out);
    const Vec2 s = original.edge_end(o.edge_out) - c;
    const double denom = skew(r, s);
    if (std::abs(denom) > 1e-9 * r.norm() * s.norm()) {
      out.push_back(a + r * (skew(c - a, s) / denom));
    } else {
      // Overlapping collinear edges: keep the position along the line.
      const double t = dot(verts[i] - a, r) / dot(r, r);
      out.push_back(a + r * t);
    }
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency, what);
}

bool ring_contains(std::span<const Vec2> ring, Vec2 p) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ring[i];
    const Vec2 b = ring[(i + 1) % n];
    if (point_segment_distance(p, a, b) == 0.0) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

CertReport certify(const Polygon& k, const Polygon& l) {
  CertReport r;
  r.aco_k = aco_polygon(k).value;
  r.aco_l = aco_polygon(l).value;
  r.certified = r.aco_k > -kPi + kEpsAngle && r.aco_l > -kPi + kEpsAngle;
  r.aco_lower_bound = std::min(r.aco_k, r.aco_l);
  return r;
}

Polyline align_cycle(const Polygon& k) {
  const auto v = k.vertices();
  const std::size_t n = v.size();
  const std::size_t c = lowest_vertex(v);
  std::vector<Vec2> verts{v[c]};
  std::vector<Shift> shifts;
  // The outward normal (0,-1) is supported at the lowest vertex, so a
  // zero-length edge pointing right is legal there.
  if (!points_right(k.edge(c))) {
    shifts.push_back(Shift::virtual_edge(kRight));
    verts.push_back(v[c]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    shifts.push_back(Shift::of(k.edge(c + i)));
    verts.push_back(v[(c + i + 1) % n]);
  }
  shifts.push_back(Shift::virtual_edge(kRight));
  verts.push_back(v[c]);
  return Polyline::assemble(std::move(verts), std::move(shifts), false);
}

std::pair<Polyline, Polyline> align_cycles(const Polygon& k, const Polygon& l) {
  return {align_cycle(k), align_cycle(l)};
}

SumResult minkowski_sum(const Polygon& k, const Polygon& l, std::uint64_t seed) {
  const CertReport cert = certify(k, l);
  if (!cert.certified) {
    throw Error(ErrorCode::AcoPreconditionViolated,
                "aco K = " + std::to_string(cert.aco_k) + ", aco L = " +
                    std::to_string(cert.aco_l) + "; both must exceed -pi");
  }
  auto [p, q] = align_cycles(k, l);
  MergedChain merged = sorted_sum(p, q);
  const MergedChain real = drop_virtual(merged);
  const auto rv = real.result.vertices();
  if (distance(rv.front(), rv.back()) > real.result.eps()) {
    inconsistent("convolution of closed boundaries does not close");
  }
  const double eps = kEpsGeomRel * std::max(k.diameter(), l.diameter());
  std::vector<Vec2> ring = clean_ring(std::vector<Vec2>(rv.begin(), rv.end() - 1), eps);
  if (ring.size() < 3) inconsistent("convolution collapsed");

  bool perturbed = false;
  Polyline cycle = Polyline::from_vertices(ring, true);
  if (!is_simple(cycle).simple) {
    try {
      if (is_general_position(cycle)) {
        const LoopElimination traced = eliminate_loops_traced(cycle);
        const auto out = traced.chain.vertices();
        ring.assign(out.begin(), out.end());
      } else {
        perturbed = true;
        const Polyline moved =
            perturb_general_position(cycle, default_perturbation(cycle), seed);
        ring = snap_back(eliminate_loops_traced(moved), cycle);
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::InternalInconsistency) throw;
      inconsistent(std::string("loop elimination failed: ") + err.what());
    }
    ring = clean_ring(std::move(ring), eps);
  }

  // The sorted sum never backtracks along an edge, so for non-convex inputs
  // its cycle can run strictly inside K + L. The boundary itself is the outer
  // face of the reduced convolution; the sorted-sum cycle must lie within it.
  const double tol = kEpsGeomRel * (k.diameter() + l.diameter());
  std::vector<Vec2> outer;
  try {
    outer = clean_ring(detail::outer_face(detail::reduced_convolution(k, l), tol), tol);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InternalInconsistency) throw;
    inconsistent(std::string("outer face extraction failed: ") + err.what());
  }
  std::optional<Polygon> sum;
  try {
    sum = require_ccw(outer);
  } catch (const Error& err) {
    inconsistent(std::string("sum boundary invalid: ") + err.what());
  }
  for (const Vec2& v : ring) {
    if (locate(*sum, v, sum->eps()) == Location::Outside) {
      inconsistent("sorted-sum cycle leaves the sum boundary");
    }
  }
  const double total_turn = rot(sum->boundary());
  if (std::abs(total_turn - 2.0 * kPi) > 1e-9) {
    inconsistent("sum boundary rotation " + std::to_string(total_turn));
  }
  const double aco_sum = aco_polygon(*sum).value;
  if (aco_sum < cert.aco_lower_bound - kEpsAngle) {
    inconsistent("aco of sum " + std::to_string(aco_sum) + " below bound " +
                 std::to_string(cert.aco_lower_bound));
  }
  return SumResult{std::move(*sum), cert, std::move(merged), perturbed};
}

Polygon convex_sum(const Polygon& k, const Polygon& l) {
  if (!is_convex(k) || !is_convex(l)) {
    throw Error(ErrorCode::NotConvex, "convex_sum needs two convex polygons");
  }
  const std::size_t n = k.size();
  const std::size_t m = l.size();
  const std::size_t ck = lowest_vertex(k.vertices());
  const std::size_t cl = lowest_vertex(l.vertices());
  auto slope = [](Vec2 e) { return ccw_angle(kRight, e); };
  std::vector<Vec2> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    out.push_back(k.vertex(ck + i) + l.vertex(cl + j));
    if (i == n) {
      ++j;
    } else if (j == m) {
      ++i;
    } else {
      const double a = slope(k.edge(ck + i));
      const double b = slope(l.edge(cl + j));
      if (std::abs(a - b) <= kEpsAngle) {
        ++i;
        ++j;
      } else if (a < b) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return orient_ccw(std::move(out));
}

bool member(const Polygon& k, const Polygon& l, Vec2 p) {
  std::vector<Vec2> shifted;
  shifted.reserve(l.size());
  for (const Vec2& b : l.vertices()) shifted.push_back(p - b);
  const auto kv = k.vertices();
  const std::size_t n = kv.size();
  const std::size_t m = shifted.size();
  // Closed sets: touching counts, up to rounding.
  const double tol = std::max(k.eps(), l.eps());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (intersect_segments(kv[i], kv[(i + 1) % n], shifted[j], shifted[(j + 1) % m], tol)) {
        return true;
      }
    }
  }
  return ring_contains(shifted, kv[0]) || ring_contains(kv, shifted[0]);
}

Polygon reflect(const Polygon& k) {
  std::vector<Vec2> v;
  v.reserve(k.size());
  for (const Vec2& p : k.vertices()) v.push_back(-p);
  return orient_ccw(std::move(v));
}

bool same_cycle(const Polygon& a, const Polygon& b, double tol) {
  const Polygon ma = merge_collinear(a);
  const Polygon mb = merge_collinear(b);
  const std::size_t n = ma.size();
  if (mb.size() != n) return false;
  for (std::size_t s = 0; s < n; ++s) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      all = distance(ma.vertex(i), mb.vertex(s + i)) <= tol;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace aconvex
