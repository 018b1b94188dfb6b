#include "apportion/tie_policy.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "apportion/random.hpp"

namespace apportion {

TieOrder::TieOrder(const VoteTally& tally, const TiePolicy& policy) {
  const std::size_t k = tally.size();
  std::vector<std::size_t> positive;
  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < k; ++i) (tally.votes(i) > 0 ? positive : zero).push_back(i);

  if (policy.mode == TiePolicy::Mode::deterministic) {
    std::stable_sort(positive.begin(), positive.end(),
                     [&](std::size_t a, std::size_t b) { return tally.votes(a) > tally.votes(b); });
  } else {
    std::mt19937_64 rng(splitmix64(policy.seed));
    for (std::size_t i = positive.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(uniform_below(rng, i));
      std::swap(positive[i - 1], positive[j]);
    }
  }

  order_ = std::move(positive);
  order_.insert(order_.end(), zero.begin(), zero.end());
  rank_.assign(k, 0);
  for (std::size_t r = 0; r < k; ++r) rank_[order_[r]] = r;
}

std::string to_string(TiePolicy::Mode mode) {
  return mode == TiePolicy::Mode::deterministic ? "deterministic" : "random";
}

}  // namespace apportion
