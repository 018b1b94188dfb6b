#pragma once

#include <cstdint>
#include <vector>

#include "apportion/allocation.hpp"
#include "apportion/rational.hpp"
#include "apportion/tally.hpp"
#include "apportion/tie_policy.hpp"

namespace apportion {

/// Divisor sequence of a highest-averages table.
enum class DivisorRule {
  dhondt,        // 1, 2, 3, ...
  sainte_lague,  // 1, 3, 5, ...
};

/// Divisor applied to a party that already holds `held` seats.
std::int64_t divisor(DivisorRule rule, Seats held);

/// Rounding of M*f_i in the multiplicative form.
///
/// A value x rounds to floor(x + 1 - t): a party gets its s-th seat once
/// x >= s - 1 + t. t = 1 is plain truncation (d'Hondt), t = 1/2 is rounding
/// to nearest (Sainte-Lague). A value sitting exactly on the threshold
/// rounds up.
class RoundingRule {
 public:
  static RoundingRule floor() { return RoundingRule(Rational(1)); }
  static RoundingRule nearest() { return RoundingRule(Rational(1, 2)); }
  /// Throws InvalidInput unless 0 < t <= 1.
  explicit RoundingRule(Rational threshold);

  const Rational& threshold() const { return threshold_; }
  Method method() const { return threshold_ == Rational(1) ? Method::dhondt : Method::sainte_lague; }
  /// Seats for ideal value x (never negative).
  Seats apply(const Rational& x) const;

  friend bool operator==(const RoundingRule&, const RoundingRule&) = default;

 private:
  Rational threshold_;
};

enum class MultiplicativeEngine {
  threshold,  // select the N smallest exact seat thresholds
  sweep,      // walk M up or down across threshold events, starting at M = N
};

/// Largest remainder: lower quotas, then leftover seats by descending residual.
/// `form` picks how the quotients are formed (v_i/q with q = V/N, or N*f_i);
/// both are exact and give the same seats.
Allocation hare_niemeyer(const VoteTally& tally, Seats house_size, const TiePolicy& tie = {},
                         Form form = Form::multiplicative);

/// Greedy simulation of the divisor table: each of the N steps awards a seat
/// to the largest next-quota bid v_i/d(n_i).
TracedAllocation highest_averages(const VoteTally& tally, Seats house_size, DivisorRule rule,
                                  const TiePolicy& tie = {}, bool record_trace = true);

/// Multiplicative form: n_i = round(M f_i) for a multiplier M filling the house.
TracedAllocation multiplicative(const VoteTally& tally, Seats house_size,
                                const RoundingRule& rounding, const TiePolicy& tie = {},
                                MultiplicativeEngine engine = MultiplicativeEngine::threshold,
                                bool record_trace = true);

struct SequentialAward {
  std::int64_t step = 0;
  std::size_t winner = 0;
  Rational deficit;  // N f_i - n_i of the winner before the award
  friend bool operator==(const SequentialAward&, const SequentialAward&) = default;
};

struct SequentialResult {
  Allocation allocation;
  std::vector<SequentialAward> events;
};

/// Hare-Niemeyer one seat at a time, always to the largest deficit N f_i - n_i.
SequentialResult sequential_hare(const VoteTally& tally, Seats house_size,
                                 const TiePolicy& tie = {});

}  // namespace apportion
