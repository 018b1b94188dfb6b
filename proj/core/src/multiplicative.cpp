#include <algorithm>
#include <numeric>
#include <queue>

#include "apportion/errors.hpp"
#include "apportion/methods.hpp"
#include "thresholds.hpp"

namespace apportion {

RoundingRule::RoundingRule(Rational threshold) : threshold_(threshold) {
  if (threshold_ <= Rational(0) || threshold_ > Rational(1))
    throw InvalidInput("rounding threshold must lie in (0, 1]");
}

Seats RoundingRule::apply(const Rational& x) const {
  return std::max<Seats>(0, (x + (Rational(1) - threshold_)).floor());
}

namespace {

using detail::ThresholdKey;
using detail::ThresholdSchedule;

Seats sum(const std::vector<Seats>& v) { return std::accumulate(v.begin(), v.end(), Seats{0}); }

void finish_trace(TraceTable& trace, const VoteTally& tally, const Rational& m) {
  trace.multiplier = m;
  if (m.is_zero()) return;
  const Rational total(tally.total());
  // quota in the divisor table's own scale: v/(2n+1) for Sainte-Lague, v/(n+t) otherwise
  trace.quota = trace.rounding_threshold == Rational(1, 2) ? total / (m * 2) : total / m;
  trace.reciprocal = Rational(1) / *trace.quota;
}

TracedAllocation by_thresholds(const VoteTally& tally, Seats house_size,
                               const RoundingRule& rounding, const TieOrder& order,
                               bool record_trace, TracedAllocation res) {
  const ThresholdSchedule schedule(tally, rounding);
  auto& seats = res.allocation.seats;

  struct Entry {
    ThresholdKey key;
    std::size_t rank;
    std::size_t party;
  };
  auto later = [](const Entry& a, const Entry& b) {
    auto c = a.key <=> b.key;
    if (c != 0) return c > 0;
    return a.rank > b.rank;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < tally.size(); ++i)
    if (schedule.eligible(i)) heap.push({schedule.key(i, 1), order.rank(i), i});

  ThresholdKey last{0, 1};
  for (Seats step = 1; step <= house_size; ++step) {
    const Entry e = heap.top();
    heap.pop();
    ++seats[e.party];
    last = e.key;
    heap.push({schedule.key(e.party, seats[e.party] + 1), e.rank, e.party});
    if (record_trace)
      res.trace.multipliers.push_back({"threshold", schedule.multiplier(e.key), seats, step});
  }

  if (house_size > 0 && heap.top().key == last) {
    TieEvent ev{"threshold", std::nullopt, schedule.multiplier(last), {}, {}};
    for (std::size_t i : order.order()) {
      if (!schedule.eligible(i)) continue;
      const bool selected = seats[i] > 0 && schedule.key(i, seats[i]) == last;
      const bool passed_over = schedule.key(i, seats[i] + 1) == last;
      if (selected || passed_over) ev.tied.push_back(i);
      if (selected) ev.chosen.push_back(i);
    }
    res.allocation.tie_events.push_back(std::move(ev));
    res.trace.witness_exact = false;
  }

  finish_trace(res.trace, tally, house_size > 0 ? schedule.multiplier(last) : Rational(0));
  return res;
}

// Literal increase/decrease loop over exact threshold events, starting at M = N.
TracedAllocation by_sweep(const VoteTally& tally, Seats house_size, const RoundingRule& rounding,
                          const TieOrder& order, bool record_trace, TracedAllocation res) {
  const ThresholdSchedule schedule(tally, rounding);
  const std::size_t k = tally.size();

  Rational m(house_size);
  std::vector<Seats> seats = schedule.seats_at(m);
  auto log = [&](const char* action) {
    if (record_trace) res.trace.multipliers.push_back({action, m, seats, sum(seats)});
  };
  log("start");

  // Multiplier at which the last seat currently held was gained, if any.
  auto top_key = [&](const std::vector<Seats>& s) -> std::optional<ThresholdKey> {
    std::optional<ThresholdKey> best;
    for (std::size_t i = 0; i < k; ++i)
      if (s[i] > 0 && (!best || schedule.key(i, s[i]) > *best)) best = schedule.key(i, s[i]);
    return best;
  };

  bool overshoot = false;
  if (sum(seats) < house_size) {
    while (true) {
      std::optional<ThresholdKey> next;
      for (std::size_t i = 0; i < k; ++i)
        if (schedule.eligible(i) && (!next || schedule.key(i, seats[i] + 1) < *next))
          next = schedule.key(i, seats[i] + 1);
      m = schedule.multiplier(*next);
      for (std::size_t i = 0; i < k; ++i)
        if (schedule.eligible(i) && schedule.key(i, seats[i] + 1) == *next) ++seats[i];
      log("up");
      if (sum(seats) >= house_size) {
        overshoot = sum(seats) > house_size;
        break;
      }
    }
  } else if (sum(seats) > house_size) {
    while (true) {
      const ThresholdKey edge = *top_key(seats);
      std::vector<Seats> below = seats;
      for (std::size_t i = 0; i < k; ++i)
        if (below[i] > 0 && schedule.key(i, below[i]) == edge) --below[i];
      if (sum(below) < house_size) {
        // the crossing at `edge` jumps over the target; stay on it and de-assign
        m = schedule.multiplier(edge);
        overshoot = true;
        break;
      }
      seats = std::move(below);
      const auto prev = top_key(seats);
      m = prev ? schedule.multiplier(*prev) : Rational(0);
      log("down");
      if (sum(seats) == house_size) break;
    }
  }

  if (overshoot) {
    // parties that crossed exactly at m give the seat back, lowest priority first
    TieEvent ev{"de-assign", std::nullopt, m, {}, {}};
    std::vector<std::size_t> crossed;
    for (std::size_t i : order.order())
      if (seats[i] > 0 && schedule.multiplier(schedule.key(i, seats[i])) == m) crossed.push_back(i);
    ev.tied = crossed;
    Seats excess = sum(seats) - house_size;
    for (auto it = crossed.rbegin(); it != crossed.rend() && excess > 0; ++it, --excess)
      --seats[*it];
    for (std::size_t i : crossed)
      if (seats[i] == schedule.seats_at(i, m)) ev.chosen.push_back(i);
    res.allocation.tie_events.push_back(std::move(ev));
    res.trace.witness_exact = false;
    log("de-assign");
  }

  res.allocation.seats = std::move(seats);
  finish_trace(res.trace, tally, m);
  return res;
}

}  // namespace

TracedAllocation multiplicative(const VoteTally& tally, Seats house_size,
                                const RoundingRule& rounding, const TiePolicy& tie,
                                MultiplicativeEngine engine, bool record_trace) {
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  const TieOrder order(tally, tie);

  TracedAllocation res;
  res.allocation.method = rounding.method();
  res.allocation.form = Form::multiplicative;
  res.allocation.house_size = house_size;
  res.allocation.seats.assign(tally.size(), 0);
  res.trace.method = rounding.method();
  res.trace.form = Form::multiplicative;
  res.trace.rounding_threshold = rounding.threshold();

  if (engine == MultiplicativeEngine::threshold)
    return by_thresholds(tally, house_size, rounding, order, record_trace, std::move(res));
  return by_sweep(tally, house_size, rounding, order, record_trace, std::move(res));
}

}  // namespace apportion
