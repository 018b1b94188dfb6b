#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/methods.hpp"

namespace apportion {

/// District (first-stage) seats per party, aligned with a VoteTally.
struct SeedDistribution {
  std::vector<Seats> district_seats;
  /// Upper bound on additional seats (sequential form).
  std::optional<Seats> cap;
  /// Exact number of additional seats (sequential form).
  std::optional<Seats> fixed_extra;

  Seats total() const;
  /// Throws InvalidInput on size mismatch, negative seats, or cap with fixed_extra.
  void validate(const VoteTally& tally) const;
};

enum class StopReason { all_residuals_below_one, cap_reached, fixed_extra_exhausted };

std::string to_string(StopReason r);
std::optional<StopReason> parse_stop_reason(std::string_view s);

/// When a seeded divisor sweep stops.
struct StopRule {
  enum class Kind { residual, fixed };
  Kind kind = Kind::residual;
  Seats extra_seats = 0;  // fixed only

  static StopRule residual() { return {}; }
  static StopRule fixed(Seats n) { return {Kind::fixed, n}; }
};

/// One iteration (sequential) or one visited multiplier (divisor sweep).
struct SeededStep {
  std::int64_t iteration = 0;
  std::optional<Rational> multiplier;  // divisor sweep only
  std::vector<Rational> deficits;      // target - m_i before the award / at the multiplier
  std::optional<std::size_t> winner;   // sequential only
  std::vector<Seats> totals;           // m_i after the step

  friend bool operator==(const SeededStep&, const SeededStep&) = default;
};

struct SeededRun {
  Method method = Method::hare;
  Form form = Form::sequential;
  std::vector<Seats> district;
  std::vector<Seats> extra;
  std::vector<Seats> totals;
  std::int64_t iterations = 0;  // J: additional seats handed out
  StopReason stop_reason = StopReason::all_residuals_below_one;
  /// Fixed target reached only by de-assigning simultaneous threshold crossings.
  bool deassigned = false;
  std::optional<Rational> multiplier;
  std::vector<Rational> final_residuals;
  std::vector<SeededStep> log;
  std::vector<TieEvent> tie_events;

  friend bool operator==(const SeededRun&, const SeededRun&) = default;
};

/// Two-stage divisor apportionment: sweep M from D+1, n_i = R(M f_i - d_i)
/// where d_i < M f_i and 0 otherwise.
SeededRun seeded_divisor(const VoteTally& tally, const SeedDistribution& seed,
                         const RoundingRule& rounding, const StopRule& stop,
                         const TiePolicy& tie = {});

/// Sequential Hare topped up from district seats; iteration j awards one seat
/// to the largest deficit f_i (D+j) - m_i. Stops when every residual is
/// strictly inside (-1, 1), at the cap, or after fixed_extra seats (in which
/// case the target house D+T is used for every deficit).
SeededRun seeded_sequential_hare(const VoteTally& tally, const SeedDistribution& seed,
                                 const TiePolicy& tie = {});

/// Upper bound on the stop iteration J of an uncapped residual-stop run.
std::int64_t residual_stop_bound(const VoteTally& tally, const SeedDistribution& seed);

}  // namespace apportion
