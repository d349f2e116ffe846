#include "fpqh/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using fpqh::Dyadic;

TEST(Dyadic, RoundTripsDoubles) {
  for (double v : {0.0, 1.0, -1.0, 0.1, -3.75, 0x1p-1074, 0x1.fffffffffffffp+1023, 1e-300, 12345.678}) {
    EXPECT_EQ(Dyadic(v).to_double(), v) << v;
  }
}

TEST(Dyadic, RejectsNonFinite) {
  EXPECT_THROW(Dyadic(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  EXPECT_THROW(Dyadic(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Dyadic, ArithmeticIsExact) {
  // 1 + 2^-80 is not a double but is representable here.
  const Dyadic a = Dyadic(1.0) + Dyadic(0x1p-80);
  EXPECT_GT(a, Dyadic(1.0));
  EXPECT_EQ(a - Dyadic(1.0), Dyadic(0x1p-80));
  EXPECT_EQ(a.to_double(), 1.0);
  EXPECT_EQ(Dyadic(3.0) * Dyadic(-0.5), Dyadic(-1.5));
  EXPECT_TRUE((Dyadic(0.1) - Dyadic(0.1)).is_zero());
}

TEST(Dyadic, SignAndAbs) {
  EXPECT_EQ(Dyadic(-2.5).sign(), -1);
  EXPECT_EQ(Dyadic(0.0).sign(), 0);
  EXPECT_EQ(Dyadic(7.0).sign(), 1);
  EXPECT_EQ(Dyadic(-2.5).abs(), Dyadic(2.5));
}

TEST(Dyadic, ToDoubleRoundsToNearestEven) {
  // 1 + 2^-53 is a tie between 1 and 1 + 2^-52: rounds to even (1).
  EXPECT_EQ((Dyadic(1.0) + Dyadic(0x1p-53)).to_double(), 1.0);
  // Just above the tie rounds up.
  EXPECT_EQ((Dyadic(1.0) + Dyadic(0x1p-53) + Dyadic(0x1p-100)).to_double(), 1.0 + 0x1p-52);
  // 1 + 3 * 2^-53 is a tie between odd 1 + 2^-52 and even 1 + 2^-51.
  EXPECT_EQ((Dyadic(1.0) + Dyadic(0x1.8p-52)).to_double(), 1.0 + 0x1p-51);
}

TEST(Dyadic, SignMatchesWellSeparatedDoubleEvaluation) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const double a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    const Dyadic x = Dyadic(a) * Dyadic(b) - Dyadic(c) * Dyadic(e);
    // Rounding error here is around 1e-10, far below the threshold.
    const double approx = a * b - c * e;
    if (std::fabs(approx) > 1e-6) {
      EXPECT_EQ(x.sign(), approx > 0 ? 1 : -1);
    }
  }
}

TEST(Dyadic, OrderingIsTotal) {
  const Dyadic a(0.5), b(0.25);
  EXPECT_LT(b, a);
  EXPECT_GT(a, b);
  EXPECT_EQ(a <=> a, std::strong_ordering::equal);
}
