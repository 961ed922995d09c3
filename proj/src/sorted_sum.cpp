#include "aconvex/sorted_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aconvex/error.hpp"

namespace aconvex {

namespace {

// suffix[i] = rotation of shifts i..n-1, i.e. the sum of turns i..n-2.
std::vector<double> suffix_rotations(const Polyline& p) {
  const std::vector<double> turns = turn_angles(p);
  std::vector<double> suffix(p.edge_count() + 1, 0.0);
  for (std::size_t i = turns.size(); i-- > 0;) suffix[i] = suffix[i + 1] + turns[i];
  return suffix;
}

std::vector<std::pair<double, double>> compress(
    std::vector<std::pair<double, double>> points) {
  if (points.size() <= 2) return points;
  std::vector<std::pair<double, double>> out{points.front()};
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const auto& [t0, v0] = out.back();
    const auto& [t1, v1] = points[i];
    const auto& [t2, v2] = points[i + 1];
    const double cross = (t1 - t0) * (v2 - v0) - (v1 - v0) * (t2 - t0);
    if (std::abs(cross) > 1e-15) out.push_back(points[i]);
  }
  out.push_back(points.back());
  return out;
}

}  // namespace

double ParamMap::operator()(double t) const {
  if (breakpoints.empty()) return t;
  if (t <= breakpoints.front().first) return breakpoints.front().second;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const auto& [t0, v0] = breakpoints[i - 1];
    const auto& [t1, v1] = breakpoints[i];
    if (t <= t1) {
      if (t1 == t0) return v1;
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  return breakpoints.back().second;
}

void validate_pair(const Polyline& p, const Polyline& q) {
  if (p.closed() || q.closed()) {
    throw Error(ErrorCode::InvalidArgument, "sorted sum needs open chains");
  }
  const Vec2 hp = p.shifts().front().direction;
  const Vec2 hq = q.shifts().front().direction;
  if (is_opposite(hp, hq) || std::abs(signed_angle(hp, hq)) > kEpsAngle) {
    throw Error(ErrorCode::StartsNotAligned, "first shifts point in different directions");
  }
  const double rp = rot(p);
  const double rq = rot(q);
  if (std::abs(rp - rq) > kEpsAngle) {
    throw Error(ErrorCode::RotationsDiffer,
                "rot P = " + std::to_string(rp) + ", rot Q = " + std::to_string(rq));
  }
  const Vec2 tp = p.shifts().back().direction;
  const Vec2 tq = q.shifts().back().direction;
  if (is_opposite(tp, tq) || std::abs(signed_angle(tp, tq)) > 10.0 * kEpsAngle) {
    throw Error(ErrorCode::InternalInconsistency,
                "aligned chains of equal rotation end in different directions");
  }
}

MergedChain sorted_sum(const Polyline& p, const Polyline& q) {
  validate_pair(p, q);
  if (aco_open(p).value <= -kPi + kEpsAngle || aco_open(q).value <= -kPi + kEpsAngle) {
    throw Error(ErrorCode::AcoPreconditionViolated, "sorted sum needs aco > -pi on both inputs");
  }
  const std::vector<double> rot_p = suffix_rotations(p);
  const std::vector<double> rot_q = suffix_rotations(q);
  const auto sp = p.shifts();
  const auto sq = q.shifts();
  const auto vp = p.vertices();
  const auto vq = q.vertices();
  const std::size_t n = sp.size();
  const std::size_t m = sq.size();

  std::vector<Shift> shifts;
  std::vector<Source> tags;
  std::vector<Vec2> vertices{vp[0] + vq[0]};
  shifts.reserve(n + m);
  tags.reserve(n + m);
  vertices.reserve(n + m + 1);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    // Exhausted sequences hand over the remainder of the other one; ties
    // (within kEpsAngle) go to P.
    const bool take_p = j == m || (i < n && rot_p[i] >= rot_q[j] - kEpsAngle);
    if (take_p) {
      shifts.push_back(sp[i]);
      tags.push_back(Source::FromP);
      ++i;
    } else {
      shifts.push_back(sq[j]);
      tags.push_back(Source::FromQ);
      ++j;
    }
    vertices.push_back(vp[i] + vq[j]);
  }
  return MergedChain{Polyline::assemble(std::move(vertices), std::move(shifts), false),
                     std::move(tags)};
}

std::pair<ParamMap, ParamMap> param_maps(const MergedChain& merged,
                                         const Polyline& p, const Polyline& q) {
  const auto out = merged.result.shifts();
  const std::size_t n = p.edge_count();
  const std::size_t m = q.edge_count();
  if (merged.tags.size() != out.size() || out.size() != n + m) {
    throw Error(ErrorCode::TagMismatch, "merged chain length differs from |S(P)| + |S(Q)|");
  }
  if (distance(merged.result.start(), p.start() + q.start()) > merged.result.eps()) {
    throw Error(ErrorCode::TagMismatch, "merged chain does not start at p(0) + q(0)");
  }
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<double, double>> phi{{0.0, 0.0}};
  std::vector<std::pair<double, double>> psi{{0.0, 0.0}};
  const double total = static_cast<double>(n + m);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const bool from_p = merged.tags[k] == Source::FromP;
    const Shift& expected = from_p ? (i < n ? p.shifts()[i] : out[k]) : (j < m ? q.shifts()[j] : out[k]);
    if ((from_p && i >= n) || (!from_p && j >= m) ||
        expected.is_virtual != out[k].is_virtual ||
        distance(expected.direction, out[k].direction) > kEpsUnit ||
        std::abs(expected.length - out[k].length) > merged.result.eps()) {
      throw Error(ErrorCode::TagMismatch, "shift " + std::to_string(k) + " does not match its tag");
    }
    (from_p ? i : j) += 1;
    const double t = static_cast<double>(k + 1) / total;
    phi.emplace_back(t, static_cast<double>(i) / static_cast<double>(n));
    psi.emplace_back(t, static_cast<double>(j) / static_cast<double>(m));
  }
  return {ParamMap{compress(std::move(phi))}, ParamMap{compress(std::move(psi))}};
}

MergedChain drop_virtual(const MergedChain& merged) {
  const auto shifts = merged.result.shifts();
  const auto vertices = merged.result.vertices();
  std::vector<Shift> kept_shifts;
  std::vector<Source> kept_tags;
  std::vector<Vec2> kept_vertices{vertices[0]};
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (shifts[k].is_virtual) continue;
    kept_shifts.push_back(shifts[k]);
    kept_tags.push_back(merged.tags[k]);
    kept_vertices.push_back(merged.result.edge_end(k));
  }
  if (kept_shifts.empty()) {
    throw Error(ErrorCode::InvalidArgument, "merged chain has no real shifts");
  }
  if (merged.result.closed()) kept_vertices.pop_back();
  return MergedChain{Polyline::assemble(std::move(kept_vertices), std::move(kept_shifts),
                                        merged.result.closed()),
                     std::move(kept_tags)};
}

}  // namespace aconvex
