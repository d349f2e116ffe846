#include "fpqh/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace fpqh;

TEST(Point, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(Point(nan, 0), std::invalid_argument);
  EXPECT_THROW(Point(0, -inf), std::invalid_argument);
  EXPECT_NO_THROW(Point(0, 0));
}

TEST(Epsilon, GammaSixRange) {
  for (const Epsilon& e : {kDouble, kSingle}) {
    EXPECT_GT(e.gamma6, 6 * e.eps);
    EXPECT_LT(e.gamma6, 7 * e.eps);
  }
  EXPECT_EQ(kDouble.eps, 0x1p-53);
  EXPECT_EQ(kSingle.eps, 0x1p-24);
}

TEST(MaxAbsCoord, Examples) {
  EXPECT_EQ(max_abs_coord({}).value, 0.0);
  const std::vector<Point> a{{1, 1}, {2, 2}};
  EXPECT_EQ(max_abs_coord(a).value, 2.0);
  const std::vector<Point> b{{-3, 0.5}};
  EXPECT_EQ(max_abs_coord(b).value, 3.0);
}

TEST(OrientExact, Examples) {
  EXPECT_TRUE(orient_exact({0, 0}, {0, 0}, {1, 1}).is_zero());
  EXPECT_EQ(orient_exact({0, 0}, {1, 0}, {0, 1}), Dyadic(-1.0));
  EXPECT_TRUE(orient_exact({0, 0}, {1, 1}, {2, 2}).is_zero());
  EXPECT_EQ(orient_exact({0, 1}, {1, 0}, {0, 0}), Dyadic(1.0));
}

TEST(OrientExact, CyclicAndAntisymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int i = 0; i < 500; ++i) {
    const Point p(d(rng), d(rng)), u(d(rng), d(rng)), q(d(rng), d(rng));
    const Dyadic o = orient_exact(p, u, q);
    EXPECT_EQ(orient_exact(q, u, p), -o);
    EXPECT_EQ(orient_exact(u, q, p), o);
  }
}

TEST(OrientExact, TranslationByExactShift) {
  // Shifting by a power of two keeps these coordinates exact.
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const Point p(d(rng), d(rng)), u(d(rng), d(rng)), q(d(rng), d(rng));
    const double s = 1024.0;
    const Point ps(p.x + s, p.y - s), us(u.x + s, u.y - s), qs(q.x + s, q.y - s);
    EXPECT_EQ(orient_exact(p, u, q), orient_exact(ps, us, qs));
  }
}

TEST(RtExact, Examples) {
  EXPECT_FALSE(rt_exact({0, 0}, {1, 1}, {2, 2}));
  EXPECT_FALSE(rt_exact({0, 0}, {1, 0}, {0, 1}));
  EXPECT_TRUE(rt_exact({0, 1}, {1, 0}, {0, 0}));
}

TEST(RtFloat, Examples) {
  // Far from degenerate, so float and exact agree.
  const Point p(0, 0), q(4, 0);
  EXPECT_TRUE(rt_float(p, Point(2, 1), q));
  EXPECT_FALSE(rt_float(p, Point(2, -1), q));
  EXPECT_FALSE(rt_float(p, Point(1, 1), Point(2, 2)));
  for (const Point u : {Point(2, 1), Point(2, -1)}) {
    EXPECT_EQ(rt_float(p, u, q), rt_exact(p, u, q));
  }
}

TEST(RtFloat, PrecomputedDeltaMatches) {
  const Point p(0.1, 0.7), q(3.3, -2.9), u(1.7, 0.05);
  EXPECT_EQ(rt_float(p, u, SegmentDelta::of(p, q)), rt_float(p, u, q));
}

TEST(FrtFloat, Examples) {
  const Point p(0, 0), q(1, 0);
  EXPECT_FALSE(frt_float(p, q, {3, 3}, {3, 3}));
  EXPECT_TRUE(frt_float(p, q, {0, 5}, {0, 1}));
  EXPECT_FALSE(frt_float(p, q, {0, 1}, {0, 5}));
}

TEST(FrtExact, Examples) {
  const Point p(0, 0), q(1, 0);
  EXPECT_FALSE(frt_exact(p, q, {3, 3}, {3, 3}));
  EXPECT_TRUE(frt_exact(p, q, {0, 5}, {0, 1}));
  EXPECT_FALSE(frt_exact(p, q, {0, 1}, {0, 5}));
}

TEST(FrtExact, AgreesWithOrientComparison) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const Point p(d(rng), d(rng)), q(d(rng), d(rng)), u(d(rng), d(rng)), u2(d(rng), d(rng));
    EXPECT_EQ(frt_exact(p, q, u, u2), orient_exact(p, u, q) > orient_exact(p, u2, q));
  }
}

TEST(FloatPredicates, AgreeAwayFromDegeneracy) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    // Small integers: every float operation is exact.
    const Point p(d(rng), d(rng)), q(d(rng), d(rng)), u(d(rng), d(rng)), u2(d(rng), d(rng));
    EXPECT_EQ(rt_float(p, u, q), rt_exact(p, u, q));
    EXPECT_EQ(frt_float(p, q, u, u2), frt_exact(p, q, u, u2));
  }
}

TEST(DistanceToLine, Examples) {
  EXPECT_EQ(distance_to_line({1, 1}, {{0, 0}, {2, 2}}), 0.0);
  EXPECT_EQ(distance_to_line({1, 3}, {{0, 0}, {2, 0}}), 3.0);
  EXPECT_DOUBLE_EQ(distance_to_line({1, 0}, {{0, 0}, {1, 1}}), 1.0 / std::sqrt(2.0));
  EXPECT_THROW(distance_to_line({1, 0}, {{2, 2}, {2, 2}}), std::invalid_argument);
}

TEST(DistanceToSegment, ClampsToEndpoints) {
  EXPECT_EQ(distance_to_segment({-3, 4}, {0, 0}, {1, 0}), 5.0);
  EXPECT_EQ(distance_to_segment({0.5, 2}, {0, 0}, {1, 0}), 2.0);
  EXPECT_EQ(distance_to_segment({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(OnSegment, ClosedSegment) {
  EXPECT_TRUE(on_segment({0, 0}, {0, 0}, {2, 2}));
  EXPECT_TRUE(on_segment({1, 1}, {0, 0}, {2, 2}));
  EXPECT_FALSE(on_segment({3, 3}, {0, 0}, {2, 2}));
  EXPECT_FALSE(on_segment({1, 1.5}, {0, 0}, {2, 2}));
}
