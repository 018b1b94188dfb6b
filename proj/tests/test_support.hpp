#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "apportion/apportion.hpp"

namespace apportion::testing {

inline VoteTally tally(std::initializer_list<Votes> votes) {
  std::vector<Votes> v(votes);
  return VoteTally::from_votes(v);
}

inline std::vector<Seats> seats(std::initializer_list<Seats> s) { return s; }

/// Small random instances; `tie_prone` draws from a tiny vote range so that
/// equal bids and residuals are common.
struct Generator {
  explicit Generator(std::uint64_t seed) : rng(seed) {}

  std::vector<Votes> votes(std::size_t min_k, std::size_t max_k, Votes max_votes) {
    std::uniform_int_distribution<std::size_t> kd(min_k, max_k);
    std::uniform_int_distribution<Votes> vd(0, max_votes);
    std::vector<Votes> v(kd(rng));
    do {
      for (auto& x : v) x = vd(rng);
    } while (std::all_of(v.begin(), v.end(), [](Votes x) { return x == 0; }));
    return v;
  }

  Seats house(Seats lo, Seats hi) { return std::uniform_int_distribution<Seats>(lo, hi)(rng); }

  std::mt19937_64 rng;
};

}  // namespace apportion::testing
