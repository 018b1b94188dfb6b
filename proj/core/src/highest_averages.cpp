#include "apportion/errors.hpp"
#include "apportion/methods.hpp"

namespace apportion {

std::int64_t divisor(DivisorRule rule, Seats held) {
  return rule == DivisorRule::dhondt ? held + 1 : 2 * held + 1;
}

TracedAllocation highest_averages(const VoteTally& tally, Seats house_size, DivisorRule rule,
                                  const TiePolicy& tie, bool record_trace) {
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  const std::size_t k = tally.size();
  const TieOrder order(tally, tie);
  const Method method = rule == DivisorRule::dhondt ? Method::dhondt : Method::sainte_lague;

  TracedAllocation res;
  Allocation& out = res.allocation;
  out.method = method;
  out.form = Form::divisor;
  out.house_size = house_size;
  out.seats.assign(k, 0);

  TraceTable& trace = res.trace;
  trace.method = method;
  trace.form = Form::divisor;
  trace.rounding_threshold = rule == DivisorRule::dhondt ? Rational(1) : Rational(1, 2);

  auto bid_of = [&](std::size_t i, Seats held) { return Rational(tally.votes(i), divisor(rule, held)); };
  // bid of i beats bid of j: compare v_i/d_i with v_j/d_j by cross-multiplication
  auto cmp = [&](std::size_t i, std::size_t j) {
    return compare_fractions(tally.votes(i), divisor(rule, out.seats[i]), tally.votes(j),
                             divisor(rule, out.seats[j]));
  };

  if (record_trace)
    for (std::size_t i = 0; i < k; ++i) trace.initial_bids.push_back(bid_of(i, 0));

  for (Seats step = 1; step <= house_size; ++step) {
    std::size_t best = order.order().front();
    for (std::size_t i : order.order())
      if (cmp(i, best) > 0) best = i;

    std::vector<std::size_t> tied;
    for (std::size_t i : order.order())
      if (cmp(i, best) == 0) tied.push_back(i);
    const Rational winning = bid_of(best, out.seats[best]);
    if (tied.size() > 1) out.tie_events.push_back({"bid", step, winning, tied, {best}});

    ++out.seats[best];
    if (step == house_size) trace.quota = winning;

    if (record_trace) {
      DivisorStep row;
      row.step = step;
      row.winner = best;
      row.winning_bid = winning;
      row.seats = out.seats;
      for (std::size_t i = 0; i < k; ++i) {
        if (out.seats[i] > 0)
          row.present.emplace_back(bid_of(i, out.seats[i] - 1));
        else
          row.present.emplace_back(std::nullopt);
        row.next.push_back(bid_of(i, out.seats[i]));
      }
      trace.steps.push_back(std::move(row));
    }
  }

  if (trace.quota) {
    trace.reciprocal = Rational(1) / *trace.quota;
    const Rational total(tally.total());
    trace.multiplier = rule == DivisorRule::dhondt ? total / *trace.quota
                                                   : total / (*trace.quota * 2);
  } else {
    trace.multiplier = Rational(0);
  }
  return res;
}

}  // namespace apportion
