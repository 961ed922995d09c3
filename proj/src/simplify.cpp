#include "aconvex/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "aconvex/error.hpp"

namespace aconvex {

namespace {

constexpr int kPerturbAttempts = 64;

std::vector<double> cumulative_lengths(const Polyline& p) {
  std::vector<double> cum{0.0};
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    cum.push_back(cum.back() + distance(p.edge_start(i), p.edge_end(i)));
  }
  return cum;
}

bool adjacent(const Polyline& p, std::size_t i, std::size_t j) {
  return j == i + 1 || (p.closed() && i == 0 && j + 1 == p.edge_count());
}

// All contacts between non-adjacent edges, in current arc-length parameters.
std::vector<IntersectionEvent> contacts(const Polyline& p, double eps) {
  const std::vector<double> cum = cumulative_lengths(p);
  const double total = cum.back();
  std::vector<IntersectionEvent> events;
  const std::size_t m = p.edge_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (adjacent(p, i, j)) continue;
      const auto hit = intersect_segments(p.edge_start(i), p.edge_end(i),
                                          p.edge_start(j), p.edge_end(j), eps);
      if (!hit) continue;
      IntersectionEvent e;
      e.edge1 = i;
      e.edge2 = j;
      e.u1 = hit->u;
      e.u2 = hit->v;
      e.point = hit->point;
      e.t1 = (cum[i] + hit->u * (cum[i + 1] - cum[i])) / total;
      e.t2 = (cum[j] + hit->v * (cum[j + 1] - cum[j])) / total;
      events.push_back(e);
    }
  }
  return events;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec2 disk_offset(std::mt19937_64& rng, double radius) {
  for (;;) {
    const Vec2 v{2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
    const double r2 = dot(v, v);
    if (r2 < 1.0) return v * radius;
  }
}

Polyline opened(const Polyline& p) {
  if (!p.closed()) return p;
  std::vector<Vec2> v(p.vertices().begin(), p.vertices().end());
  v.push_back(v.front());
  return Polyline::from_vertices(std::move(v), false);
}

}  // namespace

bool is_general_position(const Polyline& p) {
  for (const Shift& s : p.shifts()) {
    if (s.is_virtual) return false;
  }
  const double eps = p.eps();
  const auto verts = p.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (distance(verts[i], verts[j]) <= eps) return false;
    }
  }
  const std::size_t m = p.edge_count();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!adjacent(p, i, j)) continue;
      const auto hit = intersect_segments(p.edge_start(i), p.edge_end(i),
                                          p.edge_start(j), p.edge_end(j), eps);
      if (hit && hit->overlap) return false;
    }
  }
  const std::vector<IntersectionEvent> events = contacts(p, eps);
  for (const IntersectionEvent& e : events) {
    const double l1 = distance(p.edge_start(e.edge1), p.edge_end(e.edge1));
    const double l2 = distance(p.edge_start(e.edge2), p.edge_end(e.edge2));
    const bool interior1 = e.u1 * l1 > eps && (1.0 - e.u1) * l1 > eps;
    const bool interior2 = e.u2 * l2 > eps && (1.0 - e.u2) * l2 > eps;
    if (!interior1 || !interior2) return false;
    // Proper crossing only: collinear overlaps are excluded.
    const auto hit = intersect_segments(p.edge_start(e.edge1), p.edge_end(e.edge1),
                                        p.edge_start(e.edge2), p.edge_end(e.edge2), eps);
    if (hit && hit->overlap) return false;
  }
  for (std::size_t a = 0; a < events.size(); ++a) {
    for (std::size_t b = a + 1; b < events.size(); ++b) {
      if (distance(events[a].point, events[b].point) <= eps) return false;
    }
  }
  return true;
}

double default_perturbation(const Polyline& p) { return 1e-7 * p.diameter(); }

Polyline perturb_general_position(const Polyline& p, double magnitude,
                                  std::uint64_t seed) {
  if (!(magnitude > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "perturbation magnitude must be positive");
  }
  std::vector<Vec2> base;
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    if (!p.shifts()[i].is_virtual) base.push_back(p.edge_start(i));
  }
  if (!p.closed()) base.push_back(p.end());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kPerturbAttempts; ++attempt) {
    std::vector<Vec2> moved = base;
    for (Vec2& v : moved) v += disk_offset(rng, magnitude);
    try {
      Polyline candidate = Polyline::from_vertices(std::move(moved), p.closed());
      if (is_general_position(candidate)) return candidate;
    } catch (const Error&) {
      // Coincident draws: try again.
    }
  }
  throw Error(ErrorCode::GeneralPositionFailed,
              "no general-position perturbation found in " +
                  std::to_string(kPerturbAttempts) + " attempts");
}

std::optional<IntersectionEvent> first_self_intersection(const Polyline& p) {
  if (!is_general_position(p)) {
    throw Error(ErrorCode::NotGeneralPosition, "chain is not in general position");
  }
  const std::vector<IntersectionEvent> events = contacts(p, p.eps());
  if (events.empty()) return std::nullopt;
  return *std::min_element(events.begin(), events.end(),
                           [](const IntersectionEvent& a, const IntersectionEvent& b) {
                             if (a.t1 != b.t1) return a.t1 < b.t1;
                             return a.t2 < b.t2;
                           });
}

double loop_rotation(const Polyline& p, const IntersectionEvent& e) {
  const auto s = p.shifts();
  double total = 0.0;
  for (std::size_t k = e.edge1; k < e.edge2; ++k) {
    total += signed_angle(s[k].direction, s[k + 1].direction);
  }
  return total;
}

namespace {

void check_event(const Polyline& p, const IntersectionEvent& e) {
  if (e.edge1 >= e.edge2 || e.edge2 >= p.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "event edges out of order or range");
  }
}

std::vector<Vec2> cut_vertices(const Polyline& p, const IntersectionEvent& e) {
  const auto v = p.vertices();
  std::vector<Vec2> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(e.edge1) + 1);
  out.push_back(e.point);
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(e.edge2) + 1, v.end());
  return out;
}

}  // namespace

Polyline remove_loop(const Polyline& p, const IntersectionEvent& e) {
  check_event(p, e);
  const double loop = loop_rotation(p, e);
  if (loop <= -kPi) {
    throw Error(ErrorCode::LoopRotationTooNegative,
                "loop rotation " + std::to_string(loop) + " <= -pi");
  }
  return Polyline::from_vertices(cut_vertices(p, e), p.closed());
}

LoopElimination eliminate_loops_traced(const Polyline& p) {
  if (!is_general_position(p)) {
    throw Error(ErrorCode::NotGeneralPosition, "chain is not in general position");
  }
  if (aco_open(opened(p)).value <= -kPi + kEpsAngle) {
    throw Error(ErrorCode::AcoPreconditionViolated, "loop elimination needs aco > -pi");
  }
  const std::vector<double> cum = cumulative_lengths(p);
  const double total = cum.back();
  const std::size_t m = p.edge_count();

  LoopElimination out{p, {}, {}, {rot(p)}};
  // Per current edge: the input edge it lies on and its input parameter span.
  std::vector<std::size_t> edge_origin(m);
  std::vector<std::pair<double, double>> edge_span(m);
  for (std::size_t i = 0; i < m; ++i) {
    edge_origin[i] = i;
    edge_span[i] = {cum[i] / total, cum[i + 1] / total};
  }
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    out.origins.push_back(VertexOrigin{false, i, (i + m - 1) % m, i % m});
  }

  Polyline current = p;
  while (auto event = first_self_intersection(current)) {
    Polyline next = [&] {
      try {
        return remove_loop(current, *event);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::LoopRotationTooNegative) throw;
        throw Error(ErrorCode::InternalInconsistency, err.what());
      }
    }();
    const std::size_t a = event->edge1;
    const std::size_t b = event->edge2;
    const auto at = [&](std::size_t k, double u) {
      return edge_span[k].first + u * (edge_span[k].second - edge_span[k].first);
    };
    const double cut_in = at(a, event->u1);
    const double cut_out = at(b, event->u2);
    out.removed.emplace_back(cut_in, cut_out);

    std::vector<std::size_t> origin_next(edge_origin.begin(), edge_origin.begin() + static_cast<std::ptrdiff_t>(a) + 1);
    std::vector<std::pair<double, double>> span_next(edge_span.begin(), edge_span.begin() + static_cast<std::ptrdiff_t>(a) + 1);
    span_next.back().second = cut_in;
    origin_next.push_back(edge_origin[b]);
    span_next.emplace_back(cut_out, edge_span[b].second);
    origin_next.insert(origin_next.end(), edge_origin.begin() + static_cast<std::ptrdiff_t>(b) + 1, edge_origin.end());
    span_next.insert(span_next.end(), edge_span.begin() + static_cast<std::ptrdiff_t>(b) + 1, edge_span.end());

    std::vector<VertexOrigin> vorigin(out.origins.begin(), out.origins.begin() + static_cast<std::ptrdiff_t>(a) + 1);
    vorigin.push_back(VertexOrigin{true, 0, edge_origin[a], edge_origin[b]});
    vorigin.insert(vorigin.end(), out.origins.begin() + static_cast<std::ptrdiff_t>(b) + 1, out.origins.end());

    edge_origin = std::move(origin_next);
    edge_span = std::move(span_next);
    out.origins = std::move(vorigin);
    current = std::move(next);
    out.rotations.push_back(rot(current));
  }
  out.chain = std::move(current);
  return out;
}

Polyline eliminate_loops(const Polyline& p) { return eliminate_loops_traced(p).chain; }

}  // namespace aconvex
