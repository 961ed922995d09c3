#pragma once

// Boundary extraction for Minkowski sums: reduced convolution segments and the
// outer face of their arrangement.

#include <vector>

#include "aconvex/geom.hpp"

namespace aconvex::detail {

struct Segment {
  Vec2 a;
  Vec2 b;
};

/// Edge-vertex sums e + v where v is a convex vertex of the other polygon
/// whose normal cone contains the outward normal of e.
std::vector<Segment> reduced_convolution(const Polygon& k, const Polygon& l);

/// Counterclockwise ring around the unbounded face of the segment
/// arrangement, starting at its bottommost-then-leftmost point. Points closer
/// than `tol` are identified.
std::vector<Vec2> outer_face(const std::vector<Segment>& segments, double tol);

}  // namespace aconvex::detail
