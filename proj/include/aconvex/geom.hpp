#pragma once

// Plane primitives: vectors, shift sequences, polylines, simple polygons, and
// the rotation / angular-convexity measures defined on them.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace aconvex {

inline constexpr double kPi = std::numbers::pi;

// Tolerances for double-precision inputs.
inline constexpr double kEpsAngle = 1e-9;    // opposite / parallel classification, rad
inline constexpr double kEpsGeomRel = 1e-9;  // coincidence, relative to bbox diameter
inline constexpr double kEpsUnit = 1e-12;    // unit-direction check

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(Vec2 v, Vec2 w) { return v.x * w.x + v.y * w.y; }

/// Skew (2D cross) product v.x*w.y - v.y*w.x; positive when w is
/// counterclockwise of v.
constexpr double skew(Vec2 v, Vec2 w) { return v.x * w.y - v.y * w.x; }

Vec2 normalized(Vec2 v);
Vec2 rotated(Vec2 v, double angle);
double distance(Vec2 a, Vec2 b);

/// True for nonzero vectors pointing in opposite directions, within kEpsAngle.
bool is_opposite(Vec2 v, Vec2 w);

/// Signed angle from v to w in (-pi, pi), computed as atan2(skew, dot).
/// Throws ZeroVector for a null argument and OppositeVectors when the turn is
/// a reversal.
double signed_angle(Vec2 v, Vec2 w);

/// Counterclockwise angle from v to w in [0, 2pi).
double ccw_angle(Vec2 v, Vec2 w);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// An edge of a polyline as direction plus length. A virtual shift has length
/// zero but keeps its direction, so it participates in turn sequences while
/// contributing no geometry.
struct Shift {
  Vec2 direction;
  double length = 0.0;
  bool is_virtual = false;

  Vec2 vector() const { return direction * length; }

  static Shift of(Vec2 v);
  static Shift virtual_edge(Vec2 direction);
};

class Polyline {
 public:
  /// Open chain through the given vertices, or a closed cycle (the closing
  /// edge from the last vertex back to the first is implicit; a repeated
  /// first vertex at the end is dropped).
  static Polyline from_vertices(std::vector<Vec2> vertices, bool closed);

  /// Chain from a start point and a shift sequence. For closed chains the
  /// shifts must sum to zero.
  static Polyline from_shifts(Vec2 start, std::vector<Shift> shifts,
                              bool closed);

  /// Vertices and shifts supplied together; vertices are authoritative for
  /// positions, shifts for directions. Used where positions are computed
  /// exactly (e.g. as sums of input vertices).
  static Polyline assemble(std::vector<Vec2> vertices, std::vector<Shift> shifts,
                           bool closed);

  bool closed() const { return closed_; }
  Vec2 start() const { return vertices_.front(); }
  Vec2 end() const { return closed_ ? vertices_.front() : vertices_.back(); }
  std::span<const Shift> shifts() const { return shifts_; }
  /// Open: edge_count() + 1 vertices. Closed: edge_count() vertices.
  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t edge_count() const { return shifts_.size(); }
  Vec2 edge_start(std::size_t i) const { return vertices_[i]; }
  Vec2 edge_end(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }

  /// Uniform-per-shift parameterization: shift i covers
  /// [i/edge_count, (i+1)/edge_count].
  Vec2 point_at(double t) const;

  double diameter() const;
  double eps() const { return kEpsGeomRel * diameter(); }

 private:
  Polyline(std::vector<Vec2> vertices, std::vector<Shift> shifts, bool closed)
      : vertices_(std::move(vertices)),
        shifts_(std::move(shifts)),
        closed_(closed) {}

  std::vector<Vec2> vertices_;
  std::vector<Shift> shifts_;
  bool closed_ = false;
};

/// Turn angles between consecutive shifts: entry i is the signed angle from
/// shift i to shift i+1 (cyclically for closed chains).
std::vector<double> turn_angles(const Polyline& p);

/// Rotation: sum of turn angles. Zero for a single edge.
double rot(const Polyline& p);

/// Minimum rotation over all sub-chains and the sub-chain attaining it.
/// Witness indices are shift indices, inclusive; for closed boundaries the
/// witness may wrap (witness_end < witness_start). An empty turn window is
/// reported as the single shift at witness_start.
struct AcoReport {
  double value = 0.0;
  std::size_t witness_start = 0;
  std::size_t witness_end = 0;

  /// Number of turn angles inside the witness arc.
  std::size_t turn_count(std::size_t shift_count, bool cyclic) const;
};

class Polygon;

AcoReport aco_open(const Polyline& p);
AcoReport aco_polygon(const Polygon& k);

/// Enumerates every arc explicitly and sums its rotation from scratch.
AcoReport aco_bruteforce(const Polyline& p);
AcoReport aco_bruteforce(const Polygon& k);

/// Rotation of the witness arc, recomputed from the geometry.
double witness_rotation(const Polyline& p, const AcoReport& report);

struct SimplicityReport {
  bool simple = true;
  /// Offending edge pairs as arc-length-normalized parameters (t1 < t2).
  std::vector<std::pair<double, double>> intersections;
};

/// Virtual (zero-length) edges are ignored; they carry no geometry.
SimplicityReport is_simple(const Polyline& p);

double signed_area(std::span<const Vec2> ring);
double diameter(std::span<const Vec2> points);

/// Simple closed boundary oriented counterclockwise (rot = 2pi).
class Polygon {
 public:
  std::span<const Vec2> vertices() const { return boundary_.vertices(); }
  const Polyline& boundary() const { return boundary_; }
  std::size_t size() const { return boundary_.edge_count(); }
  Vec2 vertex(std::size_t i) const { return vertices()[i % size()]; }
  /// Edge vector from vertex i to vertex i+1.
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  /// Signed turn at vertex i, from edge i-1 to edge i.
  double vertex_turn(std::size_t i) const;
  double area() const { return area_; }
  double diameter() const { return boundary_.diameter(); }
  double eps() const { return boundary_.eps(); }

  Polygon translated(Vec2 offset) const;

 private:
  friend Polygon orient_ccw(std::vector<Vec2> raw);
  Polygon(Polyline boundary, double area)
      : boundary_(std::move(boundary)), area_(area) {}

  Polyline boundary_;
  double area_ = 0.0;
};

/// Validates a closed vertex ring (NotSimple, DegenerateArea) and reverses it
/// if it runs clockwise.
Polygon orient_ccw(std::vector<Vec2> raw);

/// Like orient_ccw, but refuses clockwise input with NotCCW.
Polygon require_ccw(std::vector<Vec2> raw);

/// Drops vertices whose incident edges continue in the same direction.
Polygon merge_collinear(const Polygon& k);

bool is_convex(const Polygon& k);

enum class Location { Inside, Outside, Boundary };

/// Even-odd classification; points within `band` of an edge are Boundary.
Location locate(const Polygon& k, Vec2 p, double band);

struct SegmentHit {
  double u = 0.0;  // parameter along the first segment
  double v = 0.0;  // parameter along the second segment
  Vec2 point;
  bool overlap = false;  // collinear overlap of positive length
};

/// Intersection of closed segments [a,b] and [c,d] with absolute tolerance
/// eps. For overlaps, reports the overlap point with smallest u.
std::optional<SegmentHit> intersect_segments(Vec2 a, Vec2 b, Vec2 c, Vec2 d,
                                             double eps);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

}  // namespace aconvex
