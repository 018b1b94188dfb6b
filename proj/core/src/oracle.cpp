#include "apportion/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "apportion/errors.hpp"
#include "apportion/random.hpp"

namespace apportion::oracle {

void InstanceSpace::validate() const {
  if (min_parties < 1 || min_parties > max_parties) throw InvalidInput("invalid party-count range");
  if (min_votes < 0 || max_votes < 1 || min_votes > max_votes)
    throw InvalidInput("invalid vote range (need 0 <= min <= max, max >= 1)");
  if (min_house < 0 || min_house > max_house) throw InvalidInput("invalid house-size range");
  if (trials < 0) throw InvalidInput("trial count must be non-negative");
}

Instance generate_instance(const InstanceSpace& space, std::int64_t index) {
  std::mt19937_64 rng(derive_seed(space.master_seed, static_cast<std::uint64_t>(index)));
  Instance inst;
  const auto k = static_cast<std::size_t>(uniform_in(rng, static_cast<std::int64_t>(space.min_parties),
                                                     static_cast<std::int64_t>(space.max_parties)));
  inst.votes.resize(k);
  do {
    for (auto& v : inst.votes) v = uniform_in(rng, space.min_votes, space.max_votes);
  } while (std::all_of(inst.votes.begin(), inst.votes.end(), [](Votes v) { return v == 0; }));
  inst.house_size = uniform_in(rng, space.min_house, space.max_house);
  return inst;
}

// ---------------------------------------------------------------------------

std::uint64_t count_allocations(std::size_t party_count, Seats house_size) {
  if (party_count == 0) return house_size == 0 ? 1 : 0;
  // C(N + k - 1, k - 1) built incrementally; each partial product is itself a binomial.
  const auto n = static_cast<unsigned __int128>(house_size);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i < party_count; ++i) {
    c = c * (n + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

AllocationEnumerator::AllocationEnumerator(std::size_t party_count, Seats house_size) {
  if (party_count == 0) throw InvalidInput("party count must be positive");
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  size_ = count_allocations(party_count, house_size);
  if (size_ > kEnumerationLimit)
    throw InvalidInput("refusing to enumerate " + std::to_string(size_) + " seat vectors (limit " +
                       std::to_string(kEnumerationLimit) + ")");
  current_.assign(party_count, 0);
  current_.back() = house_size;
}

bool AllocationEnumerator::next(std::vector<Seats>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = current_;
    return true;
  }
  // last non-zero part at index >= 1 moves one unit left; its remainder goes to the end
  std::size_t p = current_.size();
  for (std::size_t j = current_.size(); j-- > 1;) {
    if (current_[j] > 0) {
      p = j;
      break;
    }
  }
  if (p == current_.size()) {
    done_ = true;
    return false;
  }
  const Seats tail = current_[p];
  current_[p] = 0;
  ++current_[p - 1];
  current_.back() = tail - 1;
  out = current_;
  return true;
}

AllocationEnumerator enumerate_allocations(std::size_t party_count, Seats house_size) {
  return AllocationEnumerator(party_count, house_size);
}

std::vector<std::vector<Seats>> brute_force_divisor(const VoteTally& tally, Seats house_size,
                                                    DivisorRule rule) {
  std::vector<std::vector<Seats>> out;
  auto gen = enumerate_allocations(tally.size(), house_size);
  std::vector<Seats> n;
  while (gen.next(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < n.size() && ok; ++i) {
      if (n[i] == 0) continue;
      for (std::size_t j = 0; j < n.size() && ok; ++j) {
        // the weakest held seat must outbid every unheld next seat
        if (compare_fractions(tally.votes(j), divisor(rule, n[j]), tally.votes(i),
                              divisor(rule, n[i] - 1)) > 0)
          ok = false;
      }
    }
    if (ok) out.push_back(n);
  }
  return out;
}

std::vector<std::vector<Seats>> brute_force_largest_remainder(const VoteTally& tally,
                                                              Seats house_size) {
  std::vector<std::vector<Seats>> out;
  std::optional<Rational> best;
  auto gen = enumerate_allocations(tally.size(), house_size);
  std::vector<Seats> n;
  while (gen.next(n)) {
    Rational dist(0);
    for (std::size_t i = 0; i < n.size(); ++i) dist += abs(tally.share(i) * house_size - n[i]);
    if (!best || dist < *best) {
      best = dist;
      out.clear();
    }
    if (dist == *best) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotaCheck check_quota_property(const VoteTally& tally, Seats house_size,
                                std::span<const Seats> seats) {
  if (seats.size() != tally.size()) throw InvalidInput("seat vector does not match tally parties");
  const QuotaReport q = compute_quotas(tally, house_size);
  QuotaCheck res;
  for (std::size_t i = 0; i < seats.size(); ++i) {
    const auto& p = q.parties[i];
    if (seats[i] < p.lower || seats[i] > p.upper) {
      res.ok = false;
      res.violations.push_back({i, seats[i], p.lower, p.upper, seats[i] > p.upper});
    }
  }
  return res;
}

std::vector<Seats> allocate(const VoteTally& tally, Seats house_size, Method method,
                            const TiePolicy& tie) {
  switch (method) {
    case Method::hare: return hare_niemeyer(tally, house_size, tie).seats;
    case Method::dhondt:
      return highest_averages(tally, house_size, DivisorRule::dhondt, tie, false).allocation.seats;
    case Method::sainte_lague:
      return highest_averages(tally, house_size, DivisorRule::sainte_lague, tie, false)
          .allocation.seats;
  }
  return {};
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t space_size(const InstanceSpace& s, Seats house_span) {
  const auto r = static_cast<std::uint64_t>(s.max_votes - s.min_votes + 1);
  std::uint64_t total = 0;
  for (std::size_t k = s.min_parties; k <= s.max_parties; ++k) {
    std::uint64_t per = 1;
    for (std::size_t i = 0; i < k; ++i) per = saturating_mul(per, r);
    per = saturating_mul(per, static_cast<std::uint64_t>(house_span));
    if (total > std::numeric_limits<std::uint64_t>::max() - per)
      return std::numeric_limits<std::uint64_t>::max();
    total += per;
  }
  return total;
}

// Visits instances in canonical order until `visit` returns true.
SearchResult scan(const InstanceSpace& space, const std::function<std::optional<Witness>(const Instance&)>& visit) {
  space.validate();
  SearchResult res;
  const Seats houses = space.max_house - space.min_house + 1;
  if (space_size(space, houses) <= kEnumerationLimit) {
    res.exhaustive = true;
    for (std::size_t k = space.min_parties; k <= space.max_parties; ++k) {
      for (Seats n = space.min_house; n <= space.max_house; ++n) {
        Instance inst{std::vector<Votes>(k, space.min_votes), n};
        while (true) {
          if (std::any_of(inst.votes.begin(), inst.votes.end(), [](Votes v) { return v > 0; })) {
            ++res.instances_scanned;
            if (auto w = visit(inst)) {
              res.witness = std::move(w);
              return res;
            }
          }
          // odometer, last position fastest
          std::size_t pos = k;
          while (pos > 0 && inst.votes[pos - 1] == space.max_votes) inst.votes[--pos] = space.min_votes;
          if (pos == 0) break;
          ++inst.votes[pos - 1];
        }
      }
    }
    return res;
  }
  for (std::int64_t t = 0; t < space.trials; ++t) {
    const Instance inst = generate_instance(space, t);
    ++res.instances_scanned;
    if (auto w = visit(inst)) {
      res.witness = std::move(w);
      return res;
    }
  }
  return res;
}

template <typename Fn>
void parallel_for(std::int64_t count, Parallelism par, Fn&& fn) {
  unsigned threads = par.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : par.threads;
  if (threads <= 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::int64_t i = next++; i < count; i = next++) fn(i);
    });
}

}  // namespace

SearchResult find_quota_violation(const InstanceSpace& space, Method method, const TiePolicy& tie) {
  return scan(space, [&](const Instance& inst) -> std::optional<Witness> {
    const VoteTally tally = inst.tally();
    auto seats = allocate(tally, inst.house_size, method, tie);
    const auto check = check_quota_property(tally, inst.house_size, seats);
    if (check.ok) return std::nullopt;
    const auto& v = check.violations.front();
    Witness w{"quota-violation", method, inst, seats, {}, v.party, {}};
    w.detail = v.above_upper ? "above upper quota " + std::to_string(v.upper)
                             : "below lower quota " + std::to_string(v.lower);
    return w;
  });
}

SearchResult find_house_monotonicity_violation(const InstanceSpace& space, Method method,
                                               const TiePolicy& tie) {
  return scan(space, [&](const Instance& inst) -> std::optional<Witness> {
    const VoteTally tally = inst.tally();
    auto before = allocate(tally, inst.house_size, method, tie);
    auto after = allocate(tally, inst.house_size + 1, method, tie);
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (after[i] < before[i]) {
        return Witness{"house-monotonicity-violation", method, inst, before, after, i,
                       "loses a seat when the house grows to " + std::to_string(inst.house_size + 1)};
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------

namespace {

struct EquivalenceTrial {
  Instance instance;
  std::vector<Disagreement> failures;
  bool hare_quota_ok = true;
  bool hare_equals_dhondt = false;
};

EquivalenceTrial run_equivalence(std::int64_t index, Instance inst, const TiePolicy& tie) {
  EquivalenceTrial t;
  const VoteTally tally = inst.tally();
  const Seats n = inst.house_size;
  auto compare = [&](const char* check, const std::vector<Seats>& lhs, const std::vector<Seats>& rhs) {
    if (lhs != rhs) t.failures.push_back({index, inst, check, lhs, rhs});
  };

  const auto dh_div = highest_averages(tally, n, DivisorRule::dhondt, tie, false).allocation.seats;
  const auto sl_div = highest_averages(tally, n, DivisorRule::sainte_lague, tie, false).allocation.seats;
  const auto dh_thr = multiplicative(tally, n, RoundingRule::floor(), tie,
                                     MultiplicativeEngine::threshold, false).allocation.seats;
  const auto sl_thr = multiplicative(tally, n, RoundingRule::nearest(), tie,
                                     MultiplicativeEngine::threshold, false).allocation.seats;
  const auto dh_swp = multiplicative(tally, n, RoundingRule::floor(), tie,
                                     MultiplicativeEngine::sweep, false).allocation.seats;
  const auto sl_swp = multiplicative(tally, n, RoundingRule::nearest(), tie,
                                     MultiplicativeEngine::sweep, false).allocation.seats;
  const auto hare = hare_niemeyer(tally, n, tie).seats;
  const auto seq = sequential_hare(tally, n, tie).allocation.seats;

  compare("dhondt: multiplicative vs divisor", dh_thr, dh_div);
  compare("sainte-lague: multiplicative vs divisor", sl_thr, sl_div);
  compare("dhondt: sweep vs threshold", dh_swp, dh_thr);
  compare("sainte-lague: sweep vs threshold", sl_swp, sl_thr);
  compare("hare: sequential vs classical", seq, hare);

  t.hare_quota_ok = check_quota_property(tally, n, hare).ok;
  t.hare_equals_dhondt = hare == dh_div;
  t.instance = std::move(inst);
  return t;
}

SuiteReport equivalence_impl(std::int64_t count, const std::function<Instance(std::int64_t)>& source,
                             const TiePolicy& tie, Parallelism par) {
  std::vector<EquivalenceTrial> results(static_cast<std::size_t>(count));
  parallel_for(count, par, [&](std::int64_t i) {
    results[static_cast<std::size_t>(i)] = run_equivalence(i, source(i), tie);
  });

  SuiteReport rep;
  rep.suite = "equivalence";
  rep.tie = tie;
  rep.trials = count;
  std::int64_t quota_ok = 0;
  std::int64_t same = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    if (r.failures.empty()) {
      ++rep.agreements;
    } else {
      ++rep.disagreements;
      for (auto& f : r.failures) rep.counterexamples.push_back(std::move(f));
    }
    if (r.hare_quota_ok) {
      ++quota_ok;
    } else {
      rep.witnesses.push_back({"hare-quota-violation", Method::hare, r.instance, {}, {}, 0,
                               "trial " + std::to_string(i)});
    }
    if (r.hare_equals_dhondt) ++same;
  }
  rep.statistics["hare_quota_checks_passed"] = Rational(quota_ok);
  if (count > 0) rep.statistics["hare_equals_dhondt_fraction"] = Rational(same, count);
  return rep;
}

struct BiasTrial {
  std::vector<Seats> dhondt, hare, sainte_lague;
  std::vector<std::size_t> by_rank;  // party index of rank r (0 = most votes)
  bool complete = true;
  Instance instance;
};

BiasTrial run_bias(Instance inst, const TiePolicy& tie) {
  BiasTrial t;
  const VoteTally tally = inst.tally();
  t.dhondt = allocate(tally, inst.house_size, Method::dhondt, tie);
  t.hare = allocate(tally, inst.house_size, Method::hare, tie);
  t.sainte_lague = allocate(tally, inst.house_size, Method::sainte_lague, tie);
  for (const auto* s : {&t.dhondt, &t.hare, &t.sainte_lague})
    t.complete = t.complete && std::accumulate(s->begin(), s->end(), Seats{0}) == inst.house_size;
  t.by_rank.resize(inst.votes.size());
  std::iota(t.by_rank.begin(), t.by_rank.end(), 0);
  std::stable_sort(t.by_rank.begin(), t.by_rank.end(),
                   [&](std::size_t a, std::size_t b) { return inst.votes[a] > inst.votes[b]; });
  t.instance = std::move(inst);
  return t;
}

std::string rank_key(std::size_t r, const char* what) {
  std::string num = std::to_string(r + 1);
  if (num.size() < 2) num = "0" + num;
  return "rank" + num + "." + what;
}

SuiteReport bias_impl(std::int64_t count, const std::function<Instance(std::int64_t)>& source,
                      const TiePolicy& tie, Parallelism par) {
  std::vector<BiasTrial> results(static_cast<std::size_t>(count));
  parallel_for(count, par, [&](std::int64_t i) {
    results[static_cast<std::size_t>(i)] = run_bias(source(i), tie);
  });

  SuiteReport rep;
  rep.suite = "bias";
  rep.tie = tie;
  rep.trials = count;

  std::vector<std::int64_t> n_rank, dh_hare, dh_sl;
  std::int64_t largest_dh = 0, largest_hare = 0, largest_sl = 0, same = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.complete) {
      ++rep.agreements;
    } else {
      ++rep.disagreements;
      rep.counterexamples.push_back({static_cast<std::int64_t>(i), r.instance,
                                     "completeness", r.dhondt, r.hare});
    }
    if (r.by_rank.size() > n_rank.size()) {
      n_rank.resize(r.by_rank.size(), 0);
      dh_hare.resize(r.by_rank.size(), 0);
      dh_sl.resize(r.by_rank.size(), 0);
    }
    for (std::size_t rank = 0; rank < r.by_rank.size(); ++rank) {
      const std::size_t p = r.by_rank[rank];
      ++n_rank[rank];
      dh_hare[rank] += r.dhondt[p] - r.hare[p];
      dh_sl[rank] += r.dhondt[p] - r.sainte_lague[p];
    }
    const std::size_t top = r.by_rank.front();
    largest_dh += r.dhondt[top];
    largest_hare += r.hare[top];
    largest_sl += r.sainte_lague[top];
    if (r.dhondt == r.hare) ++same;
  }
  for (std::size_t rank = 0; rank < n_rank.size(); ++rank) {
    rep.statistics[rank_key(rank, "trials")] = Rational(n_rank[rank]);
    rep.statistics[rank_key(rank, "dhondt_minus_hare")] = Rational(dh_hare[rank], n_rank[rank]);
    rep.statistics[rank_key(rank, "dhondt_minus_sainte_lague")] = Rational(dh_sl[rank], n_rank[rank]);
  }
  if (count > 0) {
    rep.statistics["largest.dhondt_seats_mean"] = Rational(largest_dh, count);
    rep.statistics["largest.hare_seats_mean"] = Rational(largest_hare, count);
    rep.statistics["largest.sainte_lague_seats_mean"] = Rational(largest_sl, count);
    rep.statistics["hare_equals_dhondt_fraction"] = Rational(same, count);
  }
  return rep;
}

}  // namespace

SuiteReport equivalence_suite(const InstanceSpace& space, const TiePolicy& tie, Parallelism par) {
  space.validate();
  auto rep = equivalence_impl(
      space.trials, [&](std::int64_t i) { return generate_instance(space, i); }, tie, par);
  rep.space = space;
  return rep;
}

SuiteReport equivalence_suite(std::span<const Instance> instances, const TiePolicy& tie,
                              Parallelism par) {
  auto rep = equivalence_impl(
      static_cast<std::int64_t>(instances.size()),
      [&](std::int64_t i) { return instances[static_cast<std::size_t>(i)]; }, tie, par);
  rep.space.trials = rep.trials;
  return rep;
}

SuiteReport bias_montecarlo(const InstanceSpace& space, const TiePolicy& tie, Parallelism par) {
  space.validate();
  auto rep = bias_impl(
      space.trials, [&](std::int64_t i) { return generate_instance(space, i); }, tie, par);
  rep.space = space;
  return rep;
}

SuiteReport bias_montecarlo(std::span<const Instance> instances, const TiePolicy& tie,
                            Parallelism par) {
  auto rep = bias_impl(
      static_cast<std::int64_t>(instances.size()),
      [&](std::int64_t i) { return instances[static_cast<std::size_t>(i)]; }, tie, par);
  rep.space.trials = rep.trials;
  return rep;
}

SuiteReport paradox_suite(const InstanceSpace& space, const TiePolicy& tie) {
  space.validate();
  SuiteReport rep;
  rep.suite = "paradox";
  rep.space = space;
  rep.tie = tie;

  auto record = [&](SearchResult res, bool allowed, const std::string& name) {
    ++rep.trials;
    rep.statistics[name + ".instances_scanned"] = Rational(static_cast<std::int64_t>(res.instances_scanned));
    rep.statistics[name + ".found"] = Rational(res.witness ? 1 : 0);
    if (res.witness && !allowed) {
      ++rep.disagreements;
      rep.counterexamples.push_back({rep.trials - 1, res.witness->instance, name,
                                     res.witness->seats, res.witness->seats_after});
    } else {
      ++rep.agreements;
    }
    if (res.witness) rep.witnesses.push_back(std::move(*res.witness));
  };

  for (Method m : {Method::hare, Method::dhondt, Method::sainte_lague}) {
    record(find_quota_violation(space, m, tie), m != Method::hare, to_string(m) + ".quota");
    record(find_house_monotonicity_violation(space, m, tie), m == Method::hare,
           to_string(m) + ".house_monotonicity");
  }
  return rep;
}

}  // namespace apportion::oracle
