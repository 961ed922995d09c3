#pragma once

// Separation of exterior points from polygons with aco > -pi by angular
// regions: an apex at the point, two rays, measure >= pi + aco K, and no
// contact with the polygon's interior.

#include <cstddef>

#include "aconvex/geom.hpp"

namespace aconvex {

/// Convex hull of two rays from a common apex. The region is swept
/// counterclockwise from ray1_dir to ray2_dir.
struct AngularRegion {
  Vec2 apex;
  Vec2 ray1_dir;
  Vec2 ray2_dir;
  double measure = 0.0;  // in (0, pi]

  AngularRegion translated_to(Vec2 new_apex) const {
    return {new_apex, ray1_dir, ray2_dir, measure};
  }
  Vec2 bisector() const { return rotated(ray1_dir, 0.5 * measure); }
};

/// A point of the boundary together with its tangent. Edge sites have
/// param in (0,1) on edge `edge`. Vertex sites have param == 0 and sit on the
/// start vertex of `edge`; their tangent is the incoming direction turned by
/// `fan` (in [0,1]) of the vertex turn.
struct BoundarySite {
  std::size_t edge = 0;
  double param = 0.5;
  double fan = 0.0;
  Vec2 tangent;

  bool at_vertex() const { return param == 0.0; }
};

BoundarySite edge_site(const Polygon& k, std::size_t edge, double param);
BoundarySite vertex_site(const Polygon& k, std::size_t vertex, double fan);
Vec2 site_point(const Polygon& k, const BoundarySite& site);

/// Minimum rotation of boundary arcs starting (plus) / ending (minus) at the
/// site. Both are <= 0.
double gamma_plus(const Polygon& k, const BoundarySite& site);
double gamma_minus(const Polygon& k, const BoundarySite& site);

/// Region at the site: tangent turned by gamma_plus, and the reversed
/// tangent turned back by gamma_minus; measure pi + gamma_plus + gamma_minus.
AngularRegion build_region(const Polygon& k, const BoundarySite& site);

struct SeparateOptions {
  std::size_t initial_samples = 8;  // per edge and per vertex fan
  std::size_t max_refine = 12;      // doublings of the sample count
  double tolerance = 1e-6;          // slack on the measure bound, rad
};

/// Witness region with apex x. Throws AcoPreconditionViolated,
/// PointInsidePolygon (also for points within the boundary tolerance band),
/// or SearchExhausted.
AngularRegion separate(const Polygon& k, Vec2 x, const SeparateOptions& options = {});

/// No polygon point lies in the open region; touching the rays or the apex
/// is allowed.
bool region_disjoint(const AngularRegion& a, const Polygon& k);

/// Closed-cone membership.
bool region_contains(const AngularRegion& a, Vec2 p);

struct Windings {
  double bisector = 0.0;  // accumulated turning of the region bisector
  double toward = 0.0;    // accumulated turning of the direction to x
};

/// Accumulated wrapped increments over one traversal of the boundary, sampled
/// `samples` times per edge and per vertex fan.
Windings boundary_windings(const Polygon& k, Vec2 x, std::size_t samples);

}  // namespace aconvex
