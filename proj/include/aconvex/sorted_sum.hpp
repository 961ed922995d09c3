#pragma once

// Sorted sum of two polylines: a merge of their shift sequences that always
// emits the head of the remaining sequence with the larger rotation. For
// convex chains this is the classic slope-sorted edge merge.

#include <cstdint>
#include <utility>
#include <vector>

#include "aconvex/geom.hpp"

namespace aconvex {

enum class Source : std::uint8_t { FromP, FromQ };

struct MergedChain {
  Polyline result;
  std::vector<Source> tags;  // one per output shift
};

/// Monotone piecewise-linear map [0,1] -> [0,1], stored as its breakpoints.
struct ParamMap {
  std::vector<std::pair<double, double>> breakpoints;

  double operator()(double t) const;
};

/// Throws StartsNotAligned or RotationsDiffer unless the two open chains
/// start in the same direction and have equal rotation.
void validate_pair(const Polyline& p, const Polyline& q);

/// Throws AcoPreconditionViolated when either input has aco <= -pi, in
/// addition to the validate_pair checks. Virtual shifts are emitted like
/// ordinary ones.
MergedChain sorted_sum(const Polyline& p, const Polyline& q);

/// Reparameterizations phi, psi with r(t) = p(phi(t)) + q(psi(t)) under the
/// uniform-per-shift parameterizations of p, q, and the merged chain.
/// Throws TagMismatch if `merged` was not produced from p and q.
std::pair<ParamMap, ParamMap> param_maps(const MergedChain& merged,
                                         const Polyline& p, const Polyline& q);

/// Removes virtual shifts (and their tags) from a merged chain.
MergedChain drop_virtual(const MergedChain& merged);

}  // namespace aconvex
