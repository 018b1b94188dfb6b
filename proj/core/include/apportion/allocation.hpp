#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apportion/rational.hpp"
#include "apportion/tally.hpp"
#include "apportion/tie_policy.hpp"

namespace apportion {

enum class Method { hare, dhondt, sainte_lague };
enum class Form { divisor, multiplicative, sequential };

std::string to_string(Method m);
std::string to_string(Form f);
std::optional<Method> parse_method(std::string_view s);
std::optional<Form> parse_form(std::string_view s);

/// Integer seats per party, aligned with the tally's input order.
struct Allocation {
  Method method = Method::hare;
  Form form = Form::multiplicative;
  Seats house_size = 0;
  std::vector<Seats> seats;
  std::vector<TieEvent> tie_events;

  Seats total() const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// One greedy step of the divisor table: the state after `winner` took a seat.
struct DivisorStep {
  std::int64_t step = 0;  // 1-based
  std::size_t winner = 0;
  Rational winning_bid;
  std::vector<Seats> seats;
  std::vector<std::optional<Rational>> present;  // v/d(n-1); empty before the first seat
  std::vector<Rational> next;                    // v/d(n)

  friend bool operator==(const DivisorStep&, const DivisorStep&) = default;
};

/// One candidate multiplier visited by the multiplicative form.
struct MultiplierStep {
  std::string action;  // "start", "up", "down", "threshold", "de-assign"
  Rational multiplier;
  std::vector<Seats> seats;
  Seats total = 0;

  friend bool operator==(const MultiplierStep&, const MultiplierStep&) = default;
};

/// Iteration history of a highest-averages run in either form.
///
/// Divisor form fills `initial_bids` and `steps`; multiplicative form fills
/// `multipliers`. Both report the final quota q (the last winning bid, in the
/// divisor table's own scale), its reciprocal Q and the multiplier M, where
/// M = V/q for d'Hondt and M = V/(2q) for Sainte-Lague.
struct TraceTable {
  Method method = Method::dhondt;
  Form form = Form::divisor;
  Rational rounding_threshold{1};
  std::vector<Rational> initial_bids;
  std::vector<DivisorStep> steps;
  std::vector<MultiplierStep> multipliers;
  std::optional<Rational> quota;
  std::optional<Rational> reciprocal;
  std::optional<Rational> multiplier;
  /// False when no multiplier fills the house exactly and the final seat
  /// count was reached by de-assigning tied crossings.
  bool witness_exact = true;

  friend bool operator==(const TraceTable&, const TraceTable&) = default;
};

struct TracedAllocation {
  Allocation allocation;
  TraceTable trace;
};

}  // namespace apportion
