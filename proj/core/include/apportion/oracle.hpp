#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/methods.hpp"

namespace apportion::oracle {

/// Ranges from which random (or exhaustively enumerated) instances are drawn.
struct InstanceSpace {
  std::size_t min_parties = 2;
  std::size_t max_parties = 8;
  Votes min_votes = 0;
  Votes max_votes = 1'000'000;
  Seats min_house = 1;
  Seats max_house = 200;
  std::int64_t trials = 10'000;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct Instance {
  std::vector<Votes> votes;
  Seats house_size = 0;

  VoteTally tally() const { return VoteTally::from_votes(votes); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Trial `index` of a space: a pure function of (master_seed, index).
///
/// The party count, then each vote count, then the house size are drawn
/// uniformly from their inclusive ranges with an mt19937_64 stream seeded by
/// derive_seed(master_seed, index). An all-zero draw is redrawn from the same
/// stream.
Instance generate_instance(const InstanceSpace& space, std::int64_t index);

// ---------------------------------------------------------------------------
// Exhaustive substrate

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// C(N + k - 1, k - 1), saturating at UINT64_MAX.
std::uint64_t count_allocations(std::size_t party_count, Seats house_size);

/// Streams every seat vector of `party_count` non-negative parts summing to
/// `house_size`, in lexicographic order. Throws InvalidInput (with the size
/// estimate) when the count exceeds kEnumerationLimit.
class AllocationEnumerator {
 public:
  AllocationEnumerator(std::size_t party_count, Seats house_size);

  /// Writes the next vector into `out`; false once exhausted.
  bool next(std::vector<Seats>& out);
  std::uint64_t size() const { return size_; }

 private:
  std::vector<Seats> current_;
  std::uint64_t size_ = 0;
  bool started_ = false;
  bool done_ = false;
};

AllocationEnumerator enumerate_allocations(std::size_t party_count, Seats house_size);

/// All vectors satisfying the divisor-method min/max condition
/// max_i v_i/d(n_i) <= min_{n_j>0} v_j/d(n_j - 1).
std::vector<std::vector<Seats>> brute_force_divisor(const VoteTally& tally, Seats house_size,
                                                    DivisorRule rule);

/// All vectors minimizing sum_i |n_i - N f_i|; these are exactly the
/// largest-remainder outcomes over every possible tie resolution.
std::vector<std::vector<Seats>> brute_force_largest_remainder(const VoteTally& tally,
                                                              Seats house_size);

// ---------------------------------------------------------------------------
// Checks and searches

struct QuotaViolation {
  std::size_t party = 0;
  Seats seats = 0;
  Seats lower = 0;
  Seats upper = 0;
  bool above_upper = false;
};

struct QuotaCheck {
  bool ok = true;
  std::vector<QuotaViolation> violations;
};

QuotaCheck check_quota_property(const VoteTally& tally, Seats house_size,
                                std::span<const Seats> seats);

/// Seats under `method` in its divisor/classical form.
std::vector<Seats> allocate(const VoteTally& tally, Seats house_size, Method method,
                            const TiePolicy& tie = {});

struct Witness {
  std::string kind;  // "quota-violation", "house-monotonicity-violation", ...
  Method method = Method::hare;
  Instance instance;
  std::vector<Seats> seats;
  std::vector<Seats> seats_after;  // house N+1, monotonicity witnesses only
  std::size_t party = 0;
  std::string detail;
};

struct SearchResult {
  std::optional<Witness> witness;
  std::uint64_t instances_scanned = 0;
  bool exhaustive = false;
};

/// Scans the space for an instance whose allocation breaks lower or upper quota.
///
/// When the space has at most kEnumerationLimit instances it is scanned
/// exhaustively in canonical order: party count ascending, then house size
/// ascending, then vote vectors in lexicographic order (all-zero skipped).
/// Larger spaces are sampled as generate_instance(space, 0 .. trials-1).
SearchResult find_quota_violation(const InstanceSpace& space, Method method,
                                  const TiePolicy& tie = {});

/// Same scan order; looks for a party losing a seat when the house grows
/// from N to N+1.
SearchResult find_house_monotonicity_violation(const InstanceSpace& space,
                                               Method method = Method::hare,
                                               const TiePolicy& tie = {});

// ---------------------------------------------------------------------------
// Suites

struct Disagreement {
  std::int64_t trial = 0;
  Instance instance;
  std::string check;
  std::vector<Seats> lhs;
  std::vector<Seats> rhs;
};

struct SuiteReport {
  std::string suite;
  InstanceSpace space;
  TiePolicy tie;
  std::int64_t trials = 0;
  std::int64_t agreements = 0;
  std::int64_t disagreements = 0;  // trials with at least one failed check
  std::vector<Disagreement> counterexamples;
  std::vector<Witness> witnesses;
  std::map<std::string, Rational> statistics;
};

/// 0 picks std::thread::hardware_concurrency().
struct Parallelism {
  unsigned threads = 1;
};

/// Per instance: multiplicative(floor) vs divisor d'Hondt, multiplicative
/// (nearest) vs divisor Sainte-Lague, both multiplicative engines, and
/// sequential vs classical Hare, all under `tie`. Also counts Hare quota
/// checks.
SuiteReport equivalence_suite(const InstanceSpace& space, const TiePolicy& tie = {},
                              Parallelism par = {});
SuiteReport equivalence_suite(std::span<const Instance> instances, const TiePolicy& tie = {},
                              Parallelism par = {});

/// Seat deltas dHJ - Hare and dHJ - SL per vote-share rank (rank 1 largest),
/// reported as exact means. A trial counts as a disagreement only if some
/// method failed to fill the house.
SuiteReport bias_montecarlo(const InstanceSpace& space, const TiePolicy& tie = {},
                            Parallelism par = {});
SuiteReport bias_montecarlo(std::span<const Instance> instances, const TiePolicy& tie = {},
                            Parallelism par = {});

/// Quota and house-monotonicity searches for all three methods. Each search
/// is one trial; it disagrees when it finds a pathology the method is known
/// not to have (Hare below/above quota, dHJ/SL losing a seat).
SuiteReport paradox_suite(const InstanceSpace& space, const TiePolicy& tie = {});

}  // namespace apportion::oracle
