#include <gtest/gtest.h>

#include <algorithm>

#include "aconvex/error.hpp"
#include "aconvex/minkowski.hpp"
#include "testkit.hpp"

using namespace aconvex;

namespace {

Polygon square(double side, Vec2 at = {0, 0}) {
  return orient_ccw({at, at + Vec2{side, 0}, at + Vec2{side, side}, at + Vec2{0, side}});
}

Polygon lshape() { return orient_ccw({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

Polygon ushape() {
  return orient_ccw(
      {{0, 0}, {3, 0}, {3, 3}, {0, 3}, {0, 1.2}, {1, 1.2}, {1, 2}, {2, 2}, {2, 1}, {0, 1}});
}

// Probes on a jittered grid over the sum's bounding box, skipping the
// boundary band.
void expect_oracle_agreement(const Polygon& sum, const Polygon& k, const Polygon& l, int side) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const Vec2& v : sum.vertices()) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  const double band = 10 * sum.eps();
  int disagreements = 0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Vec2 p{lo_x + (hi_x - lo_x) * (i + 0.5 + 0.13) / side,
                   lo_y + (hi_y - lo_y) * (j + 0.5 - 0.07) / side};
      if (testkit::oracle_boundary_distance(sum, p) <= band) continue;
      const bool in_sum = locate(sum, p, 0.0) == Location::Inside;
      if (in_sum != member(k, l, p)) ++disagreements;
    }
  }
  EXPECT_EQ(disagreements, 0);
}

}  // namespace

TEST(AlignCycles, SquareStartsWithItsBottomEdge) {
  const Polyline p = align_cycle(square(2));
  EXPECT_EQ(p.start(), (Vec2{0, 0}));
  EXPECT_FALSE(p.shifts().front().is_virtual);
  EXPECT_EQ(p.shifts().front().vector(), (Vec2{2, 0}));
  EXPECT_NEAR(rot(p), 2 * kPi, 1e-12);
}

TEST(AlignCycles, DiamondGetsAVirtualEdge) {
  const Polyline p = align_cycle(orient_ccw({{0, -1}, {1, 0}, {0, 1}, {-1, 0}}));
  EXPECT_EQ(p.start(), (Vec2{0, -1}));
  EXPECT_TRUE(p.shifts().front().is_virtual);
  EXPECT_EQ(p.shifts().front().direction, (Vec2{1, 0}));
  EXPECT_EQ(p.shifts().front().length, 0.0);
  EXPECT_NEAR(rot(p), 2 * kPi, 1e-12);
}

TEST(AlignCycles, PairSatisfiesSortedSumPreconditions) {
  testkit::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto [p, q] = align_cycles(testkit::random_certified(rng, i), testkit::random_certified(rng, i + 1));
    EXPECT_NO_THROW(validate_pair(p, q));
    EXPECT_NEAR(rot(p), 2 * kPi, 1e-9);
    EXPECT_NEAR(rot(q), 2 * kPi, 1e-9);
  }
}

TEST(Certify, Examples) {
  const CertReport convex = certify(square(1), orient_ccw({{0, 0}, {3, 0}, {1, 2}}));
  EXPECT_TRUE(convex.certified);
  EXPECT_EQ(convex.aco_lower_bound, 0.0);

  const CertReport l = certify(lshape(), square(1));
  EXPECT_TRUE(l.certified);
  EXPECT_NEAR(l.aco_lower_bound, -kPi / 2, 1e-12);

  const CertReport u = certify(ushape(), square(0.25));
  EXPECT_NEAR(u.aco_k, -3 * kPi / 2, 1e-12);
  EXPECT_FALSE(u.certified);
}

TEST(MinkowskiSum, SquarePlusSquare) {
  const SumResult r = minkowski_sum(square(1), square(1));
  EXPECT_TRUE(same_cycle(r.polygon, square(2), 0.0));
}

TEST(MinkowskiSum, LShapePlusSmallSquare) {
  const Polygon k = lshape();
  const Polygon l = square(0.1);
  const SumResult r = minkowski_sum(k, l);
  EXPECT_TRUE(is_simple(r.polygon.boundary()).simple);
  EXPECT_GE(aco_polygon(r.polygon).value, -kPi / 2 - 1e-9);
  expect_oracle_agreement(r.polygon, k, l, 50);
}

TEST(MinkowskiSum, BoxPlusStepKeepsTheInnerCorner) {
  // The sorted-sum cycle passes the step with the box's left side and cuts
  // the corner near (7.2, 8.5); the boundary must not.
  const Polygon box = orient_ccw({{0, 0}, {1, 0}, {1, 3}, {0, 3}});
  const Polygon step = orient_ccw({{0, 0}, {8, 0}, {8, 4.8}, {6.4, 4.8}, {6.4, 8}, {0, 8}});
  const SumResult r = minkowski_sum(box, step);
  EXPECT_TRUE(member(box, step, {7.2, 8.5}));
  EXPECT_EQ(locate(r.polygon, {7.2, 8.5}, 0.0), Location::Inside);
  const Polyline cycle = drop_virtual(r.trace).result;
  EXPECT_FALSE(locate(orient_ccw(std::vector<Vec2>(cycle.vertices().begin(), cycle.vertices().end() - 1)),
                      {7.2, 8.5}, 0.0) == Location::Inside);
  expect_oracle_agreement(r.polygon, box, step, 50);
}

TEST(MinkowskiSum, RefusesUncertifiedInputs) {
  try {
    minkowski_sum(ushape(), square(0.25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AcoPreconditionViolated);
  }
}

TEST(MinkowskiSum, ConvexPairsMatchClassicMerge) {
  testkit::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const Polygon k = testkit::random_certified(rng, 2);
    const Polygon l = testkit::random_certified(rng, 2);
    EXPECT_TRUE(same_cycle(minkowski_sum(k, l).polygon, convex_sum(k, l), 0.0));
  }
}

TEST(ConvexSum, MatchesHullOfVertexSums) {
  testkit::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    const Polygon k = testkit::random_convex(rng, 9);
    const Polygon l = testkit::random_convex(rng, 7);
    std::vector<Vec2> sums;
    for (const Vec2& a : k.vertices()) {
      for (const Vec2& b : l.vertices()) sums.push_back(a + b);
    }
    const Polygon hull = orient_ccw(testkit::oracle_hull(sums));
    EXPECT_TRUE(same_cycle(convex_sum(k, l), hull, 1e-12));
  }
}

TEST(ConvexSum, TrianglePlusReflectionIsCentrallySymmetricHexagon) {
  const Polygon t = orient_ccw({{0, 0}, {2, 0}, {0.5, 1.5}});
  const Polygon h = convex_sum(t, reflect(t));
  ASSERT_EQ(h.size(), 6u);
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec2 mid = (h.vertex(i) + h.vertex(i + 3)) / 2.0;
    EXPECT_NEAR(mid.x, 0.0, 1e-12);
    EXPECT_NEAR(mid.y, 0.0, 1e-12);
  }
  EXPECT_THROW(convex_sum(lshape(), t), Error);
}

TEST(Member, Examples) {
  EXPECT_TRUE(member(square(1), square(1), {1.5, 1.5}));
  EXPECT_FALSE(member(square(1), square(1), {2.5, 0}));
  const Polygon k = lshape();
  const Polygon l = orient_ccw({{0, 0}, {3, 0}, {1, 2}});
  for (const Vec2& a : k.vertices()) {
    for (const Vec2& b : l.vertices()) EXPECT_TRUE(member(k, l, a + b));
  }
}

TEST(Reflect, Examples) {
  const Polygon r = reflect(square(1));
  EXPECT_TRUE(same_cycle(r, square(1, {-1, -1}), 0.0));
  EXPECT_GT(r.area(), 0.0);
  EXPECT_TRUE(same_cycle(reflect(reflect(lshape())), lshape(), 0.0));
  EXPECT_NEAR(aco_bruteforce(reflect(lshape())).value, aco_bruteforce(lshape()).value, 1e-12);
}

TEST(MinkowskiSum, CertifiedRandomPairs) {
  testkit::Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    const Polygon k = testkit::random_certified(rng, i);
    const Polygon l = testkit::random_certified(rng, i / 3);
    const SumResult r = minkowski_sum(k, l);
    EXPECT_TRUE(is_simple(r.polygon.boundary()).simple);
    EXPECT_NEAR(rot(r.polygon.boundary()), 2 * kPi, 1e-9);
    EXPECT_GE(aco_polygon(r.polygon).value,
              std::min(aco_polygon(k).value, aco_polygon(l).value) - 1e-9);
    expect_oracle_agreement(r.polygon, k, l, 30);

    // Every vertex of k shifted by a vertex of l is in the sum.
    for (const Vec2& a : k.vertices()) EXPECT_TRUE(member(k, l, a + l.vertex(0)));
  }
}

TEST(MinkowskiSum, CommutesAndTranslates) {
  testkit::Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    const Polygon k = testkit::random_certified(rng, i);
    const Polygon l = testkit::random_certified(rng, i + 1);
    const Polygon kl = minkowski_sum(k, l).polygon;
    const Polygon lk = minkowski_sum(l, k).polygon;
    const double tol = std::max(kl.eps(), 1e-12);
    EXPECT_TRUE(same_cycle(kl, lk, tol)) << "pair " << i;

    const Vec2 t{0.75, -1.25};
    const Polygon moved = minkowski_sum(k.translated(t), l).polygon;
    EXPECT_TRUE(same_cycle(moved, kl.translated(t), 10 * tol)) << "pair " << i;
  }
}

TEST(MinkowskiSum, SeedDoesNotChangeDegenerateResults) {
  // Rectilinear inputs make the convolution degenerate.
  const Polygon k = lshape();
  const Polygon l = orient_ccw({{0, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0.5, 0.5}, {0, 0.5}});
  const SumResult a = minkowski_sum(k, l, 1);
  const SumResult b = minkowski_sum(k, l, 2);
  EXPECT_TRUE(same_cycle(a.polygon, b.polygon, 1e-12));
  expect_oracle_agreement(a.polygon, k, l, 50);
}
