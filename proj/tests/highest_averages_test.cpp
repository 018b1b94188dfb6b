#include <gtest/gtest.h>

#include "apportion/methods.hpp"
#include "apportion/oracle.hpp"
#include "test_support.hpp"

using namespace apportion;
using apportion::testing::seats;
using apportion::testing::tally;

namespace {

std::vector<Seats> dhondt(const VoteTally& t, Seats n, const TiePolicy& tie = {}) {
  return highest_averages(t, n, DivisorRule::dhondt, tie).allocation.seats;
}
std::vector<Seats> sainte_lague(const VoteTally& t, Seats n, const TiePolicy& tie = {}) {
  return highest_averages(t, n, DivisorRule::sainte_lague, tie).allocation.seats;
}

}  // namespace

TEST(Divisors, Sequences) {
  EXPECT_EQ(divisor(DivisorRule::dhondt, 0), 1);
  EXPECT_EQ(divisor(DivisorRule::dhondt, 4), 5);
  EXPECT_EQ(divisor(DivisorRule::sainte_lague, 0), 1);
  EXPECT_EQ(divisor(DivisorRule::sainte_lague, 2), 5);
}

TEST(HighestAverages, WorkedExamples) {
  EXPECT_EQ(dhondt(tally({600, 300, 100}), 10), seats({6, 3, 1}));
  EXPECT_EQ(sainte_lague(tally({600, 300, 100}), 10), seats({6, 3, 1}));
  EXPECT_EQ(dhondt(tally({53, 24, 23}), 10), seats({6, 2, 2}));
  EXPECT_EQ(dhondt(tally({53, 24, 23}), 3), seats({2, 1, 0}));
  EXPECT_EQ(sainte_lague(tally({53, 24, 23}), 3), seats({1, 1, 1}));
  EXPECT_EQ(sainte_lague(tally({78, 78, 422, 422}), 10), seats({1, 1, 4, 4}));
  EXPECT_EQ(dhondt(tally({78, 78, 422, 422}), 10), seats({0, 0, 5, 5}));
}

TEST(HighestAverages, DhondtCanExceedUpperQuota) {
  EXPECT_EQ(dhondt(tally({88, 6, 6}), 10), seats({10, 0, 0}));
  EXPECT_EQ(compute_quotas(tally({88, 6, 6}), 10).parties[0].upper, 9);
}

TEST(HighestAverages, WinningBidsFollowTheTable) {
  // 53, 26.5, 24, 23, 17.67, 13.25, 12, 11.5, 10.6, 8.83
  const std::vector<Rational> expected{Rational(53),    Rational(53, 2), Rational(24),
                                       Rational(23),    Rational(53, 3), Rational(53, 4),
                                       Rational(12),    Rational(23, 2), Rational(53, 5),
                                       Rational(53, 6)};
  const auto res = highest_averages(tally({53, 24, 23}), 10, DivisorRule::dhondt);
  ASSERT_EQ(res.trace.steps.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_EQ(res.trace.steps[i].winning_bid, expected[i]) << "step " << i + 1;
}

TEST(HighestAverages, TraceRowsAndQuotaRelations) {
  const auto t = tally({53, 24, 23});
  const auto dh = highest_averages(t, 10, DivisorRule::dhondt);
  EXPECT_EQ(dh.trace.initial_bids, (std::vector<Rational>{53, 24, 23}));
  const auto& first = dh.trace.steps.front();
  EXPECT_EQ(first.winner, 0u);
  EXPECT_EQ(first.present[0], Rational(53));
  EXPECT_FALSE(first.present[1].has_value());
  EXPECT_EQ(first.next[0], Rational(53, 2));
  // q is the last bid paid, M = V/q and Q = 1/q
  EXPECT_EQ(dh.trace.quota, Rational(53, 6));
  EXPECT_EQ(dh.trace.reciprocal, Rational(6, 53));
  EXPECT_EQ(dh.trace.multiplier, Rational(600, 53));

  const auto sl = highest_averages(t, 3, DivisorRule::sainte_lague);
  ASSERT_EQ(sl.trace.steps.size(), 3u);
  EXPECT_EQ(sl.trace.quota, Rational(23));
  EXPECT_EQ(sl.trace.multiplier, Rational(100, 46));  // V / (2q)
  EXPECT_EQ(sl.trace.steps[0].next[0], Rational(53, 3));
}

TEST(HighestAverages, TraceInvariantsOnRandomInstances) {
  apportion::testing::Generator gen(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = VoteTally::from_votes(gen.votes(1, 6, trial % 2 ? 10 : 5000));
    const Seats n = gen.house(0, 30);
    for (auto rule : {DivisorRule::dhondt, DivisorRule::sainte_lague}) {
      const auto res = highest_averages(t, n, rule, TiePolicy::seeded_random(trial));
      ASSERT_EQ(static_cast<Seats>(res.trace.steps.size()), n);
      std::vector<Rational> row = res.trace.initial_bids;
      const TieOrder order(t, TiePolicy::seeded_random(trial));
      for (const auto& s : res.trace.steps) {
        // winner holds the maximum of the previous next-quota row, first in priority among equals
        for (std::size_t i = 0; i < row.size(); ++i) {
          EXPECT_LE(row[i], row[s.winner]);
          if (row[i] == row[s.winner]) EXPECT_LE(order.rank(s.winner), order.rank(i));
        }
        EXPECT_EQ(s.winning_bid, row[s.winner]);
        row = s.next;
      }
    }
  }
}

TEST(HighestAverages, AgreesWithDivisorCriterionBruteForce) {
  apportion::testing::Generator gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = VoteTally::from_votes(gen.votes(1, 4, 40));
    const Seats n = gen.house(0, 12);
    for (auto rule : {DivisorRule::dhondt, DivisorRule::sainte_lague}) {
      const auto res = highest_averages(t, n, rule);
      const auto valid = oracle::brute_force_divisor(t, n, rule);
      EXPECT_NE(std::find(valid.begin(), valid.end(), res.allocation.seats), valid.end());
      if (res.allocation.tie_events.empty()) EXPECT_EQ(valid.size(), 1u);
    }
  }
}

TEST(HighestAverages, ZeroVotePartiesNeverWin) {
  const auto t = tally({0, 3, 0});
  EXPECT_EQ(dhondt(t, 5), seats({0, 5, 0}));
  EXPECT_EQ(sainte_lague(t, 5, TiePolicy::seeded_random(1)), seats({0, 5, 0}));
}

TEST(HighestAverages, EmptyHouse) {
  const auto res = highest_averages(tally({3, 4}), 0, DivisorRule::dhondt);
  EXPECT_EQ(res.allocation.seats, seats({0, 0}));
  EXPECT_TRUE(res.trace.steps.empty());
  EXPECT_FALSE(res.trace.quota.has_value());
}

TEST(HighestAverages, EqualVotesRecordBidTies) {
  const auto res = highest_averages(tally({10, 10, 10}), 4, DivisorRule::dhondt);
  EXPECT_EQ(res.allocation.seats, seats({2, 1, 1}));
  ASSERT_FALSE(res.allocation.tie_events.empty());
  EXPECT_EQ(res.allocation.tie_events[0].stage, "bid");
  EXPECT_EQ(res.allocation.tie_events[0].tied.size(), 3u);
}
