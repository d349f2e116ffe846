#include "fpqh/generators.hpp"
#include "fpqh/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace fpqh;

TEST(Hausdorff, PointSets) {
  const std::vector<Point> a{{1, 1}}, b{{2, 2}};
  EXPECT_DOUBLE_EQ(hausdorff(a, b), std::sqrt(2.0));
  const std::vector<Point> c{{100, 100}}, d{{200, 200}};
  EXPECT_DOUBLE_EQ(hausdorff(c, d), 100 * std::sqrt(2.0));
  EXPECT_EQ(hausdorff(a, a), 0.0);
  EXPECT_THROW(hausdorff(a, std::vector<Point>{}), std::invalid_argument);
}

TEST(Hausdorff, DirectedPartsTakeMaximum) {
  const std::vector<Point> a{{0, 0}}, b{{0, 0}, {3, 4}};
  EXPECT_EQ(hausdorff(a, b), 5.0);
  EXPECT_EQ(hausdorff(b, a), 5.0);
}

TEST(Hausdorff, PolygonsMeasureRegions) {
  const Polygon big{{{0, 0}, {0, 4}, {4, 4}, {4, 0}}};
  const Polygon small{{{1, 1}, {1, 2}, {2, 2}, {2, 1}}};
  // small lies inside big; the far corner of big is (4,4), distance to small
  // is |(4,4) - (2,2)|.
  EXPECT_DOUBLE_EQ(hausdorff(big, small), std::sqrt(8.0));
  EXPECT_EQ(hausdorff(big, big), 0.0);
}

TEST(Hausdorff, DegeneratePolygons) {
  const Polygon seg{{{0, 0}, {2, 0}}};
  const Polygon pt{{{1, 1}}};
  EXPECT_EQ(hausdorff(pt, seg), std::sqrt(2.0));
}

TEST(Contains, BoundaryAndInterior) {
  const Polygon sq{{{0, 0}, {0, 2}, {2, 2}, {2, 0}}};
  EXPECT_TRUE(contains(sq, {1, 1}));
  EXPECT_TRUE(contains(sq, {0, 1}));
  EXPECT_TRUE(contains(sq, {2, 2}));
  EXPECT_FALSE(contains(sq, {3, 1}));
  EXPECT_FALSE(contains(sq, {-0.5, 2}));
  EXPECT_FALSE(contains(sq, {1, 2.0000001}));
}

TEST(Contains, NonConvexOutline) {
  // An L shape, clockwise.
  const Polygon L{{{0, 0}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}}};
  EXPECT_TRUE(contains(L, {0.5, 1.5}));
  EXPECT_FALSE(contains(L, {1.5, 1.5}));
  EXPECT_TRUE(contains(L, {1.5, 0.5}));
}

TEST(DM, UnitInvariant) {
  const std::vector<Point> a{{1, 1}}, b{{2, 2}}, c{{100, 100}}, d{{200, 200}};
  const double metres = d_M(a, b, Scale{2});
  const double centimetres = d_M(c, d, Scale{200});
  EXPECT_DOUBLE_EQ(metres, std::sqrt(2.0) / 2);
  EXPECT_DOUBLE_EQ(metres, centimetres);
  EXPECT_THROW(d_M(a, b, Scale{0}), std::invalid_argument);
}

TEST(DM, ScaledCongruentPairs) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> A, B;
    for (int j = 0; j < 5; ++j) A.emplace_back(d(rng), d(rng));
    for (int j = 0; j < 5; ++j) B.emplace_back(d(rng), d(rng));
    std::vector<Point> all = A;
    all.insert(all.end(), B.begin(), B.end());
    const double s = std::ldexp(1.0, static_cast<int>(rng() % 40) - 20);
    std::vector<Point> As, Bs;
    for (auto& u : A) As.emplace_back(u.x * s, u.y * s);
    for (auto& u : B) Bs.emplace_back(u.x * s, u.y * s);
    std::vector<Point> alls = As;
    alls.insert(alls.end(), Bs.begin(), Bs.end());
    EXPECT_DOUBLE_EQ(d_M(A, B, max_abs_coord(all)), d_M(As, Bs, max_abs_coord(alls)));
  }
}

TEST(Hausdorff, MetricProperties) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-1, 1);
  auto set = [&] {
    std::vector<Point> S;
    for (int j = 0; j < 6; ++j) S.emplace_back(d(rng), d(rng));
    return S;
  };
  for (int i = 0; i < 200; ++i) {
    const auto A = set(), B = set(), C = set();
    EXPECT_EQ(hausdorff(A, B), hausdorff(B, A));
    EXPECT_LE(hausdorff(A, C), hausdorff(A, B) + hausdorff(B, C) + 1e-15);
    EXPECT_GE(hausdorff(A, B), 0.0);
  }
}

TEST(Conditioning, ZeroDeltaPasses) {
  const auto P = generate({GeneratorSpec::Kind::UniformDisk, 50, 1});
  EXPECT_TRUE(conditioning_check(P, 0.0, 3, 1));
  const auto t = conditioning_trial(P, 0.0, 1);
  EXPECT_EQ(t.hull_distance, 0.0);
}

TEST(Conditioning, DiskInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto P = generate({GeneratorSpec::Kind::UniformDisk, 40, seed});
    EXPECT_TRUE(conditioning_check(P, 1e-6, 1, seed));
  }
}

TEST(Conditioning, LadderInstances) {
  for (std::size_t k : {1u, 4u, 10u}) {
    const auto P = ladder(64, k).points;
    for (double delta : {1e-3, 1e-9}) EXPECT_TRUE(conditioning_check(P, delta, 5, k));
  }
}

TEST(Conditioning, RejectsTinyInputs) {
  const std::vector<Point> P{{0, 0}, {1, 1}};
  EXPECT_THROW(conditioning_check(P, 1e-3, 1, 1), std::invalid_argument);
}

TEST(ForwardError, ExactVersusExactIsZero) {
  const auto P = generate({GeneratorSpec::Kind::Gaussian, 300, 4});
  const Hull e = quickhull(P, PredicateMode::Exact);
  const auto r = forward_error(P, e, e, max_abs_coord(P), ReductionStrategy::sequential());
  EXPECT_EQ(r.d_M, 0.0);
  EXPECT_TRUE(r.within_bound());
}

TEST(ForwardError, WellSeparatedFloatHullIsExact) {
  const auto P = generate({GeneratorSpec::Kind::UniformCircle, 100, 4});
  const Hull f = quickhull(P, PredicateMode::Float, {}, {.audit = true});
  const Hull e = quickhull(P, PredicateMode::Exact);
  ASSERT_EQ(f.audit->total(), 0u);
  EXPECT_EQ(forward_error(P, f, e, max_abs_coord(P), {}).d_M, 0.0);
}

TEST(ForwardError, BoundIsTwoDepthChain) {
  const auto P = generate({GeneratorSpec::Kind::UniformDisk, 100, 2});
  const Hull e = quickhull(P, PredicateMode::Exact);
  const auto s = ReductionStrategy::pairwise();
  const auto r = forward_error(P, e, e, max_abs_coord(P), s);
  EXPECT_DOUBLE_EQ(r.bound, 2.0 * static_cast<double>(e.depth) * 7 * kDouble.gamma6);
  EXPECT_DOUBLE_EQ(f_bound(ReductionStrategy::sequential(), 100), 99 * kDouble.gamma6);
}
