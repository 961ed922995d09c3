#include "aconvex/separation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "aconvex/error.hpp"

namespace aconvex {

namespace {

std::vector<double> vertex_turns(const Polygon& k) {
  std::vector<double> theta(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) theta[i] = k.vertex_turn(i);
  return theta;
}

struct MinPrefix {
  double acc = 0.0;
  double best = 0.0;
  void operator()(double turn) {
    acc += turn;
    best = std::min(best, acc);
  }
};

double forward_min(std::span<const double> theta, const BoundarySite& s) {
  const std::size_t n = theta.size();
  MinPrefix step;
  if (s.at_vertex()) {
    const std::size_t i = s.edge % n;
    step((1.0 - s.fan) * theta[i]);
    for (std::size_t k = 1; k < n; ++k) step(theta[(i + k) % n]);
    step(s.fan * theta[i]);
  } else {
    for (std::size_t k = 1; k <= n; ++k) step(theta[(s.edge + k) % n]);
  }
  return step.best;
}

double backward_min(std::span<const double> theta, const BoundarySite& s) {
  const std::size_t n = theta.size();
  MinPrefix step;
  if (s.at_vertex()) {
    const std::size_t i = s.edge % n;
    step(s.fan * theta[i]);
    for (std::size_t k = 1; k < n; ++k) step(theta[(i + n - k) % n]);
    step((1.0 - s.fan) * theta[i]);
  } else {
    for (std::size_t k = 0; k < n; ++k) step(theta[(s.edge + n - k) % n]);
  }
  return step.best;
}

AngularRegion region_from(Vec2 apex, Vec2 tangent, double plus, double minus) {
  const Vec2 r_plus = rotated(tangent, plus);
  const Vec2 r_minus = -rotated(tangent, -minus);
  return AngularRegion{apex, r_minus, r_plus, kPi + plus + minus};
}

BoundarySite make_vertex_site(const Polygon& k, std::span<const double> theta,
                              std::size_t vertex, double fan) {
  const std::size_t n = k.size();
  const std::size_t i = vertex % n;
  const Vec2 incoming = normalized(k.edge(i + n - 1));
  return BoundarySite{i, 0.0, fan, rotated(incoming, fan * theta[i])};
}

struct Sample {
  BoundarySite site;
  Vec2 point;
  AngularRegion region;
};

class Scanner {
 public:
  Scanner(const Polygon& k) : k_(k), theta_(vertex_turns(k)) {}

  Sample at(const BoundarySite& site) const {
    const Vec2 p = site_point(k_, site);
    return Sample{site, p,
                  region_from(p, site.tangent, forward_min(theta_, site),
                              backward_min(theta_, site))};
  }

  BoundarySite vertex(std::size_t i, double fan) const {
    return make_vertex_site(k_, theta_, i, fan);
  }

  BoundarySite edge(std::size_t e, double param) const { return edge_site(k_, e, param); }

  // One traversal: fan of vertex i, then the interior of edge i, for all i.
  std::vector<Sample> traverse(std::size_t samples) const {
    std::vector<Sample> out;
    for (std::size_t i = 0; i < k_.size(); ++i) {
      for (std::size_t j = 0; j <= samples; ++j) {
        out.push_back(at(vertex(i, static_cast<double>(j) / static_cast<double>(samples))));
      }
      for (std::size_t j = 1; j < samples; ++j) {
        out.push_back(at(edge(i, static_cast<double>(j) / static_cast<double>(samples))));
      }
    }
    return out;
  }

 private:
  const Polygon& k_;
  std::vector<double> theta_;
};

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Angle from the region bisector to the direction towards x.
double mismatch(const Sample& s, Vec2 x) {
  return wrap_angle(angle_of(x - s.point) - angle_of(s.region.bisector()));
}

}  // namespace

BoundarySite edge_site(const Polygon& k, std::size_t edge, double param) {
  if (!(param > 0.0 && param < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "edge site parameter must lie in (0,1)");
  }
  const std::size_t e = edge % k.size();
  return BoundarySite{e, param, 0.0, normalized(k.edge(e))};
}

BoundarySite vertex_site(const Polygon& k, std::size_t vertex, double fan) {
  if (!(fan >= 0.0 && fan <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "fan fraction must lie in [0,1]");
  }
  const std::vector<double> theta = vertex_turns(k);
  return make_vertex_site(k, theta, vertex, fan);
}

Vec2 site_point(const Polygon& k, const BoundarySite& site) {
  const Vec2 a = k.vertex(site.edge);
  return a + k.edge(site.edge) * site.param;
}

double gamma_plus(const Polygon& k, const BoundarySite& site) {
  return forward_min(vertex_turns(k), site);
}

double gamma_minus(const Polygon& k, const BoundarySite& site) {
  return backward_min(vertex_turns(k), site);
}

AngularRegion build_region(const Polygon& k, const BoundarySite& site) {
  const Scanner scanner(k);
  return scanner.at(site).region;
}

bool region_contains(const AngularRegion& a, Vec2 p) {
  const Vec2 d = p - a.apex;
  const double slack = 1e-12 * d.norm();
  return skew(a.ray1_dir, d) >= -slack && skew(d, a.ray2_dir) >= -slack &&
         (a.measure < kPi - kEpsAngle ? dot(d, a.bisector()) >= -slack : true);
}

bool region_disjoint(const AngularRegion& a, const Polygon& k) {
  if (!(a.measure > 0.0)) return false;
  const double tol = k.eps();
  // Open region = {left of ray1} and {right of ray2}; both are affine along
  // an edge, so clip the edge's parameter interval against them.
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Vec2 p0 = k.vertex(i) - a.apex;
    const Vec2 p1 = k.vertex(i + 1) - a.apex;
    double lo = 0.0;
    double hi = 1.0;
    const double f[2][2] = {{skew(a.ray1_dir, p0), skew(a.ray1_dir, p1)},
                            {skew(p0, a.ray2_dir), skew(p1, a.ray2_dir)}};
    for (const auto& g : f) {
      // Keep t with g0 + t (g1 - g0) > tol.
      const double g0 = g[0] - tol;
      const double g1 = g[1] - tol;
      if (g0 <= 0.0 && g1 <= 0.0) {
        lo = 1.0;
        hi = 0.0;
        break;
      }
      if (g0 <= 0.0) lo = std::max(lo, g0 / (g0 - g1));
      if (g1 <= 0.0) hi = std::min(hi, g0 / (g0 - g1));
    }
    if (lo < hi) return false;
  }
  return true;
}

AngularRegion separate(const Polygon& k, Vec2 x, const SeparateOptions& options) {
  const double aco = aco_polygon(k).value;
  if (aco <= -kPi + kEpsAngle) {
    throw Error(ErrorCode::AcoPreconditionViolated,
                "separation needs aco > -pi, got " + std::to_string(aco));
  }
  switch (locate(k, x, k.eps())) {
    case Location::Inside:
      throw Error(ErrorCode::PointInsidePolygon, "point lies inside the polygon");
    case Location::Boundary:
      throw Error(ErrorCode::PointInsidePolygon, "point lies on the polygon boundary");
    case Location::Outside:
      break;
  }
  const Scanner scanner(k);
  const double required = kPi + aco - options.tolerance;

  auto verified = [&](const Sample& s) -> std::optional<AngularRegion> {
    const AngularRegion moved = s.region.translated_to(x);
    if (moved.measure >= required && region_disjoint(moved, k)) return moved;
    return std::nullopt;
  };

  std::size_t samples = std::max<std::size_t>(options.initial_samples, 2);
  for (std::size_t round = 0; round <= options.max_refine; ++round, samples *= 2) {
    const std::vector<Sample> scan = scanner.traverse(samples);
    std::vector<Sample> candidates;

    // Sign changes of the bisector/target mismatch, refined by bisection
    // when both samples lie on the same edge interior or the same fan.
    for (std::size_t i = 0; i < scan.size(); ++i) {
      const Sample& a = scan[i];
      const Sample& b = scan[(i + 1) % scan.size()];
      const double da = mismatch(a, x);
      const double db = mismatch(b, x);
      if ((da > 0.0) == (db > 0.0) || std::abs(da) > kPi / 2 || std::abs(db) > kPi / 2) {
        continue;
      }
      const bool same_edge = !a.site.at_vertex() && !b.site.at_vertex() && a.site.edge == b.site.edge;
      const bool same_fan = a.site.at_vertex() && b.site.at_vertex() && a.site.edge == b.site.edge;
      if (!same_edge && !same_fan) {
        candidates.push_back(std::abs(da) < std::abs(db) ? a : b);
        continue;
      }
      double lo = same_edge ? a.site.param : a.site.fan;
      double hi = same_edge ? b.site.param : b.site.fan;
      const bool lo_positive = da > 0.0;
      Sample mid = a;
      for (int it = 0; it < 50; ++it) {
        const double t = 0.5 * (lo + hi);
        mid = scanner.at(same_edge ? scanner.edge(a.site.edge, t) : scanner.vertex(a.site.edge, t));
        ((mismatch(mid, x) > 0.0) == lo_positive ? lo : hi) = t;
      }
      candidates.push_back(mid);
    }
    for (const Sample& s : candidates) {
      if (auto region = verified(s)) return *region;
    }

    // Fall back to any sample whose region already contains x.
    std::vector<std::pair<double, std::size_t>> containing;
    for (std::size_t i = 0; i < scan.size(); ++i) {
      if (region_contains(scan[i].region, x)) {
        containing.emplace_back(std::abs(mismatch(scan[i], x)), i);
      }
    }
    std::sort(containing.begin(), containing.end());
    if (containing.size() > 64) containing.resize(64);
    for (const auto& [score, idx] : containing) {
      if (auto region = verified(scan[idx])) return *region;
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no verified witness after " + std::to_string(options.max_refine) +
                  " refinements");
}

Windings boundary_windings(const Polygon& k, Vec2 x, std::size_t samples) {
  const Scanner scanner(k);
  const std::vector<Sample> scan = scanner.traverse(std::max<std::size_t>(samples, 2));
  Windings w;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const Sample& a = scan[i];
    const Sample& b = scan[(i + 1) % scan.size()];
    w.bisector += wrap_angle(angle_of(b.region.bisector()) - angle_of(a.region.bisector()));
    w.toward += wrap_angle(angle_of(x - b.point) - angle_of(x - a.point));
  }
  return w;
}

}  // namespace aconvex
