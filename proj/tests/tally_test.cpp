#include <gtest/gtest.h>

#include "apportion/errors.hpp"
#include "apportion/tally.hpp"
#include "test_support.hpp"

using namespace apportion;
using apportion::testing::tally;

TEST(VoteTally, RejectsInvalidInput) {
  EXPECT_THROW(VoteTally(std::vector<Party>{}), InvalidInput);
  EXPECT_THROW(tally({0, 0}), InvalidInput);
  EXPECT_THROW(VoteTally({{"A", 1}, {"A", 2}}), InvalidInput);
  EXPECT_THROW(VoteTally({{"A", -1}, {"B", 2}}), InvalidInput);
  EXPECT_THROW(VoteTally({{"A", std::numeric_limits<Votes>::max()}, {"B", 1}}), InvalidInput);
}

TEST(VoteTally, SharesAreExact) {
  const auto t = tally({600, 300, 100});
  EXPECT_EQ(t.total(), 1000);
  EXPECT_EQ(t.share(0), Rational(3, 5));
  EXPECT_EQ(t.id(2), "P3");
}

TEST(ComputeQuotas, WorkedExampleIsExactlyProportional) {
  const auto q = compute_quotas(tally({600, 300, 100}), 10);
  const std::vector<Seats> ideal{6, 3, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(q.parties[i].ideal, Rational(ideal[i]));
    EXPECT_EQ(q.parties[i].lower, ideal[i]);
    EXPECT_EQ(q.parties[i].upper, ideal[i]);
  }
  EXPECT_EQ(q.ideal_quota, Rational(100));
  for (const auto& r : q.residuals(ideal)) EXPECT_TRUE(r.is_zero());
}

TEST(ComputeQuotas, SingleParty) {
  const auto q = compute_quotas(tally({7}), 5);
  EXPECT_EQ(q.parties[0].ideal, Rational(5));
  EXPECT_EQ(q.parties[0].lower, 5);
  EXPECT_EQ(q.parties[0].upper, 5);
}

TEST(ComputeQuotas, FractionalIdeals) {
  const auto q = compute_quotas(tally({53, 24, 23}), 10);
  EXPECT_EQ(q.parties[0].ideal, Rational(53, 10));
  EXPECT_EQ(q.parties[1].ideal, Rational(24, 10));
  EXPECT_EQ(q.parties[2].ideal, Rational(23, 10));
  EXPECT_EQ(q.parties[0].lower, 5);
  EXPECT_EQ(q.parties[1].lower, 2);
  EXPECT_EQ(q.parties[2].lower, 2);
  EXPECT_EQ(q.parties[0].upper, 6);
  EXPECT_EQ(q.parties[1].upper, 3);
  EXPECT_EQ(q.parties[2].upper, 3);
}

TEST(ComputeQuotas, EmptyHouseHasNoIdealQuota) {
  const auto q = compute_quotas(tally({1, 2}), 0);
  EXPECT_FALSE(q.ideal_quota.has_value());
  EXPECT_EQ(q.parties[1].upper, 0);
  EXPECT_THROW(compute_quotas(tally({1}), -1), InvalidInput);
}

TEST(ComputeQuotas, InvariantsOnRandomTallies) {
  apportion::testing::Generator gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = gen.votes(1, 9, 1000);
    const Seats n = gen.house(0, 300);
    const auto q = compute_quotas(VoteTally::from_votes(v), n);
    Rational sum(0);
    for (const auto& p : q.parties) {
      EXPECT_LE(Rational(p.lower), p.ideal);
      EXPECT_LE(p.ideal, Rational(p.upper));
      EXPECT_TRUE(p.upper - p.lower == 0 || p.upper - p.lower == 1);
      EXPECT_EQ(p.upper == p.lower, p.ideal.is_integer());
      sum += p.ideal;
    }
    EXPECT_EQ(sum, Rational(n));
  }
}
