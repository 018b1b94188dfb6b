#include "apportion/seeded.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "apportion/errors.hpp"
#include "thresholds.hpp"

namespace apportion {

Seats SeedDistribution::total() const {
  return std::accumulate(district_seats.begin(), district_seats.end(), Seats{0});
}

void SeedDistribution::validate(const VoteTally& tally) const {
  if (district_seats.size() != tally.size())
    throw InvalidInput("district seats do not match the parties of the tally");
  for (Seats d : district_seats)
    if (d < 0) throw InvalidInput("district seats must be non-negative");
  if (cap && fixed_extra) throw InvalidInput("cap and fixed extra seats are mutually exclusive");
  if (cap && *cap < 0) throw InvalidInput("cap must be non-negative");
  if (fixed_extra && *fixed_extra < 0) throw InvalidInput("fixed extra seats must be non-negative");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::all_residuals_below_one: return "all-residuals-below-one";
    case StopReason::cap_reached: return "cap-reached";
    case StopReason::fixed_extra_exhausted: return "fixed-extra-exhausted";
  }
  return "unknown";
}

std::optional<StopReason> parse_stop_reason(std::string_view s) {
  for (auto r : {StopReason::all_residuals_below_one, StopReason::cap_reached,
                 StopReason::fixed_extra_exhausted})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

namespace {

using detail::ThresholdKey;
using detail::ThresholdSchedule;

// A zero-vote party holding district seats keeps a residual <= -1 forever.
void require_reachable_residual_stop(const VoteTally& tally, const SeedDistribution& seed) {
  for (std::size_t i = 0; i < tally.size(); ++i)
    if (tally.votes(i) == 0 && seed.district_seats[i] > 0)
      throw InvalidInput("party " + tally.id(i) +
                         " holds district seats without votes; residual stop is unreachable");
}

std::vector<Rational> residuals_at(const VoteTally& tally, const Rational& house,
                                   const std::vector<Seats>& totals) {
  std::vector<Rational> out;
  out.reserve(totals.size());
  for (std::size_t i = 0; i < totals.size(); ++i)
    out.push_back(house * tally.share(i) - totals[i]);
  return out;
}

bool all_below_one(const std::vector<Rational>& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return abs(x) < Rational(1); });
}

std::vector<Seats> plus(const std::vector<Seats>& a, const std::vector<Seats>& b) {
  std::vector<Seats> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

std::int64_t residual_stop_bound(const VoteTally& tally, const SeedDistribution& seed) {
  seed.validate(tally);
  require_reachable_residual_stop(tally, seed);
  const Seats d_total = seed.total();
  std::int64_t catch_up = 0;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally.votes(i) == 0) continue;
    // smallest j >= 0 with f_i (D + j) - d_i > -1
    const Rational lim = Rational(seed.district_seats[i] - 1) / tally.share(i) - d_total;
    catch_up = std::max(catch_up, lim.floor() + 1);
  }
  return catch_up + static_cast<std::int64_t>(tally.size());
}

SeededRun seeded_sequential_hare(const VoteTally& tally, const SeedDistribution& seed,
                                 const TiePolicy& tie) {
  seed.validate(tally);
  const std::size_t k = tally.size();
  const TieOrder order(tally, tie);
  const Seats d_total = seed.total();

  SeededRun run;
  run.method = Method::hare;
  run.form = Form::sequential;
  run.district = seed.district_seats;
  run.totals = seed.district_seats;

  auto award = [&](std::int64_t j, const Rational& house) {
    const auto deficits = residuals_at(tally, house, run.totals);
    std::size_t best = order.order().front();
    for (std::size_t i : order.order())
      if (deficits[i] > deficits[best]) best = i;
    std::vector<std::size_t> tied;
    for (std::size_t i : order.order())
      if (deficits[i] == deficits[best]) tied.push_back(i);
    if (tied.size() > 1) run.tie_events.push_back({"deficit", j, deficits[best], tied, {best}});
    ++run.totals[best];
    run.log.push_back({j, std::nullopt, deficits, best, run.totals});
  };

  if (seed.fixed_extra) {
    const Rational house(d_total + *seed.fixed_extra);
    for (std::int64_t j = 1; j <= *seed.fixed_extra; ++j) award(j, house);
    run.iterations = *seed.fixed_extra;
    run.stop_reason = StopReason::fixed_extra_exhausted;
    run.final_residuals = residuals_at(tally, house, run.totals);
  } else {
    std::int64_t guard = -1;
    if (!seed.cap) guard = 2 * residual_stop_bound(tally, seed) + 16;
    std::int64_t j = 0;
    while (true) {
      run.final_residuals = residuals_at(tally, Rational(d_total + j), run.totals);
      if (all_below_one(run.final_residuals)) {
        run.stop_reason = StopReason::all_residuals_below_one;
        break;
      }
      if (seed.cap && j == *seed.cap) {
        run.stop_reason = StopReason::cap_reached;
        break;
      }
      if (guard >= 0 && j > guard) throw ExecutionError("seeded sequential run did not terminate");
      ++j;
      award(j, Rational(d_total + j));
    }
    run.iterations = j;
  }

  run.extra.resize(k);
  for (std::size_t i = 0; i < k; ++i) run.extra[i] = run.totals[i] - run.district[i];
  return run;
}

SeededRun seeded_divisor(const VoteTally& tally, const SeedDistribution& seed,
                         const RoundingRule& rounding, const StopRule& stop,
                         const TiePolicy& tie) {
  seed.validate(tally);
  if (stop.kind == StopRule::Kind::fixed && stop.extra_seats < 0)
    throw InvalidInput("fixed number of additional seats must be non-negative");
  const std::size_t k = tally.size();
  const TieOrder order(tally, tie);
  const ThresholdSchedule schedule(tally, rounding, seed.district_seats);
  const Rational start(seed.total() + 1);

  SeededRun run;
  run.method = rounding.method();
  run.form = Form::multiplicative;
  run.district = seed.district_seats;

  std::vector<Seats> extra;
  Rational witness;
  std::int64_t logged = 0;
  auto log = [&](const Rational& m, const std::vector<Seats>& ex) {
    auto totals = plus(seed.district_seats, ex);
    run.log.push_back({logged++, m, residuals_at(tally, m, totals), std::nullopt, totals});
  };

  if (stop.kind == StopRule::Kind::residual) {
    require_reachable_residual_stop(tally, seed);
    Rational a = start;
    extra = schedule.seats_at(a);
    constexpr std::int64_t kMaxIntervals = 10'000'000;
    for (std::int64_t n = 0;; ++n) {
      if (n > kMaxIntervals) throw ExecutionError("seeded divisor sweep did not terminate");
      log(a, extra);
      std::optional<ThresholdKey> next;
      for (std::size_t i = 0; i < k; ++i)
        if (schedule.eligible(i) && (!next || schedule.key(i, extra[i] + 1) < *next))
          next = schedule.key(i, extra[i] + 1);
      const Rational b = schedule.multiplier(*next);

      // |M f_i - m_i| < 1  <=>  (m_i - 1) V / v_i < M < (m_i + 1) V / v_i
      std::optional<Rational> lo;
      std::optional<Rational> hi;
      bool feasible = true;
      for (std::size_t i = 0; i < k; ++i) {
        const Seats m = seed.district_seats[i] + extra[i];
        if (tally.votes(i) == 0) {
          feasible = feasible && m == 0;
          continue;
        }
        const Rational l = Rational(m - 1) / tally.share(i);
        const Rational h = Rational(m + 1) / tally.share(i);
        if (!lo || l > *lo) lo = l;
        if (!hi || h < *hi) hi = h;
      }
      if (feasible) {
        const Rational upper = std::min(*hi, b);
        if (a > *lo && a < *hi) {
          witness = a;
          break;
        }
        if (*lo >= a && *lo < upper) {
          witness = (*lo + upper) / 2;
          break;
        }
      }
      a = b;
      extra = schedule.seats_at(a);
    }
    run.stop_reason = StopReason::all_residuals_below_one;
  } else {
    const Seats target = stop.extra_seats;
    const auto at_start = schedule.seats_at(start);
    log(start, at_start);
    if (std::accumulate(at_start.begin(), at_start.end(), Seats{0}) == target) {
      extra = at_start;
      witness = start;
    } else {
      // target-th smallest threshold, ties in priority order
      struct Entry {
        ThresholdKey key;
        std::size_t rank;
        std::size_t party;
      };
      auto later = [](const Entry& x, const Entry& y) {
        auto c = x.key <=> y.key;
        if (c != 0) return c > 0;
        return x.rank > y.rank;
      };
      std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);
      for (std::size_t i = 0; i < k; ++i)
        if (schedule.eligible(i)) heap.push({schedule.key(i, 1), order.rank(i), i});
      extra.assign(k, 0);
      ThresholdKey last{0, 1};
      for (Seats s = 0; s < target; ++s) {
        const Entry e = heap.top();
        heap.pop();
        ++extra[e.party];
        last = e.key;
        heap.push({schedule.key(e.party, extra[e.party] + 1), e.rank, e.party});
        if (schedule.multiplier(e.key) > start) log(schedule.multiplier(e.key), extra);
      }
      witness = target > 0 ? schedule.multiplier(last) : Rational(0);
      if (target > 0 && heap.top().key == last) {
        TieEvent ev{"de-assign", std::nullopt, witness, {}, {}};
        for (std::size_t i : order.order()) {
          if (!schedule.eligible(i)) continue;
          const bool kept = extra[i] > 0 && schedule.key(i, extra[i]) == last;
          if (kept || schedule.key(i, extra[i] + 1) == last) ev.tied.push_back(i);
          if (kept) ev.chosen.push_back(i);
        }
        run.tie_events.push_back(std::move(ev));
        run.deassigned = true;
      }
      if (witness <= start) log(witness, extra);
    }
    run.stop_reason = StopReason::fixed_extra_exhausted;
  }

  run.extra = extra;
  run.totals = plus(seed.district_seats, extra);
  run.iterations = std::accumulate(extra.begin(), extra.end(), std::int64_t{0});
  run.multiplier = witness;
  run.final_residuals = residuals_at(tally, witness, run.totals);
  return run;
}

}  // namespace apportion
