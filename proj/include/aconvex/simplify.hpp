#pragma once

// Self-intersection handling for polylines: general-position checks and
// perturbation, ordered intersection events, and loop removal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aconvex/geom.hpp"

namespace aconvex {

/// A crossing p(t1) = p(t2), t1 < t2, in arc-length-normalized parameters.
struct IntersectionEvent {
  double t1 = 0.0;
  double t2 = 0.0;
  Vec2 point;
  std::size_t edge1 = 0;  // edge containing p(t1)
  std::size_t edge2 = 0;  // edge containing p(t2)
  double u1 = 0.0;        // local parameter of the crossing on edge1
  double u2 = 0.0;        // local parameter of the crossing on edge2
};

/// Distinct vertices, edges meeting at most once (at a shared vertex or in
/// both relative interiors), and no point common to three edges.
bool is_general_position(const Polyline& p);

/// Moves every vertex by a seeded pseudo-random offset of norm < magnitude
/// until the chain is in general position (64 attempts, then
/// GeneralPositionFailed). Closed chains stay closed.
Polyline perturb_general_position(const Polyline& p, double magnitude,
                                  std::uint64_t seed);

/// Default perturbation magnitude: 1e-7 of the bounding-box diameter.
double default_perturbation(const Polyline& p);

/// Smallest t1, then smallest t2. Throws NotGeneralPosition.
std::optional<IntersectionEvent> first_self_intersection(const Polyline& p);

/// Rotation of the sub-chain between p(t1) and p(t2).
double loop_rotation(const Polyline& p, const IntersectionEvent& e);

/// Cuts out the loop between the event's parameters and rejoins at the
/// crossing point. Throws LoopRotationTooNegative when the loop turns by
/// -pi or less.
Polyline remove_loop(const Polyline& p, const IntersectionEvent& e);

/// Where an output vertex of loop elimination came from.
struct VertexOrigin {
  bool crossing = false;
  std::size_t vertex = 0;     // input vertex index when !crossing
  std::size_t edge_in = 0;    // input edge arriving at the vertex
  std::size_t edge_out = 0;   // input edge leaving the vertex
};

struct LoopElimination {
  Polyline chain;
  std::vector<VertexOrigin> origins;  // one per chain vertex
  /// Removed intervals in the input chain's arc-length parameter.
  std::vector<std::pair<double, double>> removed;
  /// Rotation before any removal, then after each removal.
  std::vector<double> rotations;
};

/// Removes loops first-crossing-first until the chain is simple. Requires
/// general position and aco > -pi (for closed chains, of the chain opened at
/// vertex 0).
LoopElimination eliminate_loops_traced(const Polyline& p);
Polyline eliminate_loops(const Polyline& p);

}  // namespace aconvex
