#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apportion/rational.hpp"
#include "apportion/tally.hpp"

namespace apportion {

/// How exactly-equal quantities (bids, residuals, thresholds) are ordered.
///
/// Instead of perturbing values with a small random epsilon, ties are broken
/// by a priority permutation over parties, so all arithmetic stays exact.
struct TiePolicy {
  enum class Mode { deterministic, seeded_random };

  Mode mode = Mode::deterministic;
  std::uint64_t seed = 0;

  static TiePolicy deterministic() { return {}; }
  static TiePolicy seeded_random(std::uint64_t seed) { return {Mode::seeded_random, seed}; }

  friend bool operator==(const TiePolicy&, const TiePolicy&) = default;
};

/// Priority order of parties under a TiePolicy. Rank 0 is served first.
///
/// Deterministic: more votes first, then earlier input position.
/// Seeded-random: positive-vote parties in a Fisher-Yates permutation drawn
/// from the seed. In both modes zero-vote parties come last.
class TieOrder {
 public:
  TieOrder(const VoteTally& tally, const TiePolicy& policy);

  std::size_t rank(std::size_t party) const { return rank_[party]; }
  bool before(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }
  /// Parties listed from highest to lowest priority.
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

/// One place where the tie policy decided between exactly equal values.
struct TieEvent {
  std::string stage;  // "bid", "residual", "deficit", "threshold", "de-assign"
  std::optional<std::int64_t> step;
  Rational value;
  std::vector<std::size_t> tied;    // every party holding the tied value, by priority
  std::vector<std::size_t> chosen;  // the parties the policy favoured

  friend bool operator==(const TieEvent&, const TieEvent&) = default;
};

std::string to_string(TiePolicy::Mode mode);

}  // namespace apportion
