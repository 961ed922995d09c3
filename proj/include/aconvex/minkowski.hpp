#pragma once

// Minkowski sums of simple polygons. The aligned boundaries are merged by the
// sorted sum (loops eliminated), and the boundary is the outer face of the
// reduced convolution, which must contain that cycle. Inputs with aco > -pi
// are certified hole-free; others are refused.

#include <cstdint>
#include <utility>

#include "aconvex/geom.hpp"
#include "aconvex/sorted_sum.hpp"

namespace aconvex {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct CertReport {
  double aco_k = 0.0;
  double aco_l = 0.0;
  bool certified = false;
  double aco_lower_bound = 0.0;  // min(aco_k, aco_l), meaningful when certified
};

struct SumResult {
  Polygon polygon;
  CertReport certificate;
  MergedChain trace;  // raw sorted sum of the aligned boundaries
  bool perturbed = false;  // the sorted-sum cycle needed general position
};

CertReport certify(const Polygon& k, const Polygon& l);

/// Opens the boundary at its bottommost-then-leftmost vertex so that it
/// starts and ends with direction (1,0), inserting zero-length virtual shifts
/// where the boundary has no such edge. The result has rotation 2pi.
Polyline align_cycle(const Polygon& k);
std::pair<Polyline, Polyline> align_cycles(const Polygon& k, const Polygon& l);

/// Throws AcoPreconditionViolated for uncertified inputs and
/// InternalInconsistency if the result fails validation. `seed` drives the
/// general-position perturbation of degenerate sorted-sum cycles.
SumResult minkowski_sum(const Polygon& k, const Polygon& l,
                        std::uint64_t seed = kDefaultSeed);

/// Classic slope-sorted edge merge of two convex polygons (NotConvex
/// otherwise).
Polygon convex_sum(const Polygon& k, const Polygon& l);

/// Membership in K + L straight from the definition: K meets p - L.
bool member(const Polygon& k, const Polygon& l, Vec2 p);

/// Point reflection through the origin.
Polygon reflect(const Polygon& k);

/// Same vertex cycle up to starting vertex and collinear vertices.
bool same_cycle(const Polygon& a, const Polygon& b, double tol);

}  // namespace aconvex
