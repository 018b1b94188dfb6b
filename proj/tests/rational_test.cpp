#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "apportion/rational.hpp"

using apportion::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(10, 5), Rational(2));
  EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(Rational(53, 10).floor(), 5);
  EXPECT_EQ(Rational(53, 10).ceil(), 6);
  EXPECT_EQ(Rational(-53, 10).floor(), -6);
  EXPECT_EQ(Rational(-53, 10).ceil(), -5);
  EXPECT_EQ(Rational(4).floor(), 4);
  EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
}

TEST(Rational, OrderingUsesCrossMultiplication) {
  EXPECT_LT(Rational(53, 6), Rational(24, 2));
  EXPECT_GT(Rational(88, 10), Rational(6));
  // differ only beyond double precision
  const std::int64_t big = 1'000'000'000'000'000LL;
  EXPECT_LT(Rational(big, big + 1), Rational(big + 1, big + 2));
  EXPECT_NE(Rational(big, big + 1), Rational(big + 1, big + 2));
}

TEST(Rational, OverflowIsReportedNotWrapped) {
  const Rational huge(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(huge + Rational(1), std::overflow_error);
  EXPECT_THROW(huge * Rational(2), std::overflow_error);
  // intermediate products exceed 64 bits but the reduced result fits
  const Rational a(std::numeric_limits<std::int64_t>::max() / 3, 7);
  EXPECT_EQ(a * Rational(7, std::numeric_limits<std::int64_t>::max() / 3), Rational(1));
}

TEST(Rational, ToString) {
  EXPECT_EQ(Rational(53, 2).to_string(), "53/2");
  EXPECT_EQ(Rational(-4).to_string(), "-4");
  EXPECT_EQ(Rational(1, 3).to_decimal(3), "0.333");
}

TEST(Rational, FieldPropertiesOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(a + b, b + a);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    // exactly one of <, ==, > and it agrees with the sign of the difference
    EXPECT_EQ(a < b, (a - b).sign() < 0);
    EXPECT_EQ(a == b, (a - b).is_zero());
    EXPECT_LE(Rational(a.floor()), a);
    EXPECT_GT(Rational(a.floor() + 1), a);
  }
}
