// Acceptance checks. Prints one PASS/FAIL line per criterion; exits non-zero
// if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apportion/apportion.hpp"
#include "apportion/json.hpp"

using namespace apportion;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      note << what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << secs
            << " s)";
  const std::string note = o.note.str();
  if (!note.empty()) std::cout << "  -- " << note;
  std::cout << std::endl;
}

VoteTally votes(std::initializer_list<Votes> v) {
  std::vector<Votes> vv(v);
  return VoteTally::from_votes(vv);
}

std::string show(const std::vector<Seats>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

Seats sum(const std::vector<Seats>& v) { return std::accumulate(v.begin(), v.end(), Seats{0}); }

std::vector<std::pair<std::string, std::vector<Seats>>> every_form(const VoteTally& t, Seats n,
                                                                  const TiePolicy& tie = {}) {
  return {
      {"hare/multiplicative", hare_niemeyer(t, n, tie).seats},
      {"hare/divisor", hare_niemeyer(t, n, tie, Form::divisor).seats},
      {"hare/sequential", sequential_hare(t, n, tie).allocation.seats},
      {"dhondt/divisor", highest_averages(t, n, DivisorRule::dhondt, tie, false).allocation.seats},
      {"dhondt/multiplicative",
       multiplicative(t, n, RoundingRule::floor(), tie, MultiplicativeEngine::threshold, false)
           .allocation.seats},
      {"dhondt/sweep",
       multiplicative(t, n, RoundingRule::floor(), tie, MultiplicativeEngine::sweep, false)
           .allocation.seats},
      {"sainte-lague/divisor",
       highest_averages(t, n, DivisorRule::sainte_lague, tie, false).allocation.seats},
      {"sainte-lague/multiplicative",
       multiplicative(t, n, RoundingRule::nearest(), tie, MultiplicativeEngine::threshold, false)
           .allocation.seats},
      {"sainte-lague/sweep",
       multiplicative(t, n, RoundingRule::nearest(), tie, MultiplicativeEngine::sweep, false)
           .allocation.seats},
  };
}

oracle::InstanceSpace suite_space(std::uint64_t seed) {
  oracle::InstanceSpace s;
  s.min_parties = 2;
  s.max_parties = 8;
  s.min_votes = 0;
  s.max_votes = 1'000'000;
  s.min_house = 1;
  s.max_house = 200;
  s.trials = 10'000;
  s.master_seed = seed;
  return s;
}

oracle::InstanceSpace alabama_space() {
  oracle::InstanceSpace s;
  s.min_parties = 3;
  s.max_parties = 3;
  s.min_votes = 0;
  s.max_votes = 8;
  s.min_house = 1;
  s.max_house = 12;
  return s;
}

}  // namespace

int main() {
  report(1, "votes (600,300,100), N=10 give (6,3,1) under every method and form", [](Outcome& o) {
    for (const auto& [name, s] : every_form(votes({600, 300, 100}), 10))
      o.require(s == std::vector<Seats>{6, 3, 1}, name + " gave " + show(s));
  });

  report(2, "equivalence suite: 10000 instances, zero disagreements, under 2 minutes",
         [](Outcome& o) {
           const auto t0 = Clock::now();
           const auto det = oracle::equivalence_suite(suite_space(2024), TiePolicy{}, {0});
           const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
           o.require(det.trials == 10'000, "ran " + std::to_string(det.trials) + " trials");
           o.require(det.disagreements == 0,
                     std::to_string(det.disagreements) + " disagreements (deterministic ties)");
           for (const auto& d : det.counterexamples) {
             o.require(false, "trial " + std::to_string(d.trial) + " " + d.check);
             break;
           }
           o.require(secs < 120.0, "took " + std::to_string(secs) + " s");
           const auto rnd = oracle::equivalence_suite(suite_space(2025), TiePolicy::seeded_random(7), {0});
           o.require(rnd.disagreements == 0,
                     std::to_string(rnd.disagreements) + " disagreements (seeded ties)");
           o.note << (o.pass ? "" : "; ") << "deterministic-tie run " << secs << " s";
         });

  report(3, "Hare quota property on every suite instance; (88,6,6) d'Hondt flagged above upper quota 9",
         [](Outcome& o) {
           const auto rep = oracle::equivalence_suite(suite_space(3003), TiePolicy{}, {0});
           o.require(rep.statistics.at("hare_quota_checks_passed") == Rational(rep.trials),
                     "hare quota failures: " + std::to_string(rep.witnesses.size()));
           const auto t = votes({88, 6, 6});
           const auto dh = highest_averages(t, 10, DivisorRule::dhondt).allocation.seats;
           o.require(dh == std::vector<Seats>{10, 0, 0}, "d'Hondt gave " + show(dh));
           const auto check = oracle::check_quota_property(t, 10, dh);
           o.require(!check.ok && check.violations.size() == 1 && check.violations[0].party == 0 &&
                         check.violations[0].above_upper && check.violations[0].upper == 9,
                     "violation not reported as party 1 above upper quota 9");
         });

  report(4, "votes (78,78,422,422), N=10: Hare (1,1,4,4), d'Hondt (0,0,5,5), Sainte-Lague (1,1,4,4)",
         [](Outcome& o) {
           const auto t = votes({78, 78, 422, 422});
           const std::vector<Seats> small{1, 1, 4, 4}, large{0, 0, 5, 5};
           for (const auto& [name, s] : every_form(t, 10)) {
             const auto& want = name.rfind("dhondt", 0) == 0 ? large : small;
             o.require(s == want, name + " gave " + show(s));
           }
         });

  report(5, "Alabama paradox (6,6,2) and house-monotonicity searches", [](Outcome& o) {
    const auto t = votes({6, 6, 2});
    const auto a = hare_niemeyer(t, 10).seats;
    const auto b = hare_niemeyer(t, 11).seats;
    o.require(a == std::vector<Seats>{4, 4, 2}, "N=10 gave " + show(a));
    o.require(b == std::vector<Seats>{5, 5, 1}, "N=11 gave " + show(b));
    const auto hare = oracle::find_house_monotonicity_violation(alabama_space(), Method::hare);
    o.require(hare.witness.has_value(), "no Hare witness found");
    if (hare.witness) {
      const auto& w = *hare.witness;
      const auto tt = w.instance.tally();
      o.require(hare_niemeyer(tt, w.instance.house_size).seats == w.seats &&
                    hare_niemeyer(tt, w.instance.house_size + 1).seats == w.seats_after &&
                    w.seats_after[w.party] < w.seats[w.party],
                "Hare witness does not replay");
    }
    for (Method m : {Method::dhondt, Method::sainte_lague}) {
      const auto res = oracle::find_house_monotonicity_violation(alabama_space(), m);
      o.require(!res.witness.has_value(), to_string(m) + " produced a witness");
      o.require(res.exhaustive, to_string(m) + " search was not exhaustive");
    }
  });

  report(6, "seeded sequential Hare runs", [](Outcome& o) {
    const auto r1 = seeded_sequential_hare(votes({50, 30, 20}), {{3, 2, 0}, {}, {}});
    o.require(r1.iterations == 1 && r1.totals == std::vector<Seats>{3, 2, 1} &&
                  r1.stop_reason == StopReason::all_residuals_below_one,
              "(50,30,20): J=" + std::to_string(r1.iterations) + " totals " + show(r1.totals));
    const auto r2 = seeded_sequential_hare(votes({20, 80}), {{3, 1}, {}, {}});
    o.require(r2.iterations == 7 && r2.totals == std::vector<Seats>{3, 8},
              "(20,80): J=" + std::to_string(r2.iterations) + " totals " + show(r2.totals));
    const auto r3 = seeded_sequential_hare(votes({20, 80}), {{3, 1}, Seats{3}, {}});
    o.require(r3.totals == std::vector<Seats>{3, 4} && r3.stop_reason == StopReason::cap_reached,
              "cap 3: totals " + show(r3.totals) + " stop " + to_string(r3.stop_reason));
  });

  report(7, "property suites: completeness, scale invariance, monotonicity, determinism, overshoot",
         [](Outcome& o) {
           oracle::InstanceSpace space = suite_space(77);
           space.max_house = 120;
           std::int64_t checked = 0;
           for (std::int64_t i = 0; i < 1500; ++i) {
             // alternate wide and tie-prone vote ranges
             space.max_votes = i % 2 ? 1'000'000 : 12;
             const auto inst = oracle::generate_instance(space, i);
             const auto t = inst.tally();
             const Seats n = inst.house_size;
             const auto tie = i % 3 ? TiePolicy::seeded_random(i) : TiePolicy{};
             const auto base = every_form(t, n, tie);
             for (const auto& [name, s] : base)
               if (sum(s) != n) o.require(false, "completeness " + name + " trial " + std::to_string(i));

             std::vector<Votes> scaled = inst.votes;
             const Votes c = 2 + i % 997;
             for (auto& v : scaled) v *= c;
             const auto big = every_form(VoteTally::from_votes(scaled), n, tie);
             for (std::size_t f = 0; f < base.size(); ++f)
               if (base[f].second != big[f].second)
                 o.require(false, "scale " + base[f].first + " trial " + std::to_string(i));

             if (every_form(t, n, tie) != base)
               o.require(false, "determinism trial " + std::to_string(i));

             for (auto rule : {DivisorRule::dhondt, DivisorRule::sainte_lague}) {
               const auto at_n = highest_averages(t, n, rule, tie, false).allocation.seats;
               const auto at_n1 = highest_averages(t, n + 1, rule, tie, false).allocation.seats;
               for (std::size_t p = 0; p < at_n.size(); ++p)
                 if (at_n1[p] < at_n[p]) o.require(false, "house monotonicity trial " + std::to_string(i));
               std::vector<Votes> more = inst.votes;
               const std::size_t p = static_cast<std::size_t>(i) % more.size();
               more[p] += 1 + i % 50;
               const auto bumped =
                   highest_averages(VoteTally::from_votes(more), n, rule, TiePolicy{}, false).allocation.seats;
               const auto plain = highest_averages(t, n, rule, TiePolicy{}, false).allocation.seats;
               if (bumped[p] < plain[p]) o.require(false, "vote monotonicity trial " + std::to_string(i));
             }

             SeedDistribution seed;
             std::mt19937_64 rng(i);
             for (Votes v : inst.votes)
               seed.district_seats.push_back(v == 0 ? 0 : static_cast<Seats>(rng() % 20));
             const auto run = seeded_sequential_hare(t, seed, tie);
             for (const auto& step : run.log) {
               const std::size_t w = *step.winner;
               if (step.deficits[w] > Rational(0) && !(step.deficits[w] - 1 > Rational(-1)))
                 o.require(false, "overshoot trial " + std::to_string(i));
             }
             if (run.iterations > residual_stop_bound(t, seed))
               o.require(false, "termination bound trial " + std::to_string(i));
             ++checked;
           }
           if (o.pass) o.note << checked << " instances";
         });

  report(8, "suite JSON reports byte-identical across serial and parallel runs", [](Outcome& o) {
    auto space = suite_space(8080);
    space.trials = 2000;
    const auto dump = [](const oracle::SuiteReport& r) { return nlohmann::json(r).dump(2); };
    for (const auto& tie : {TiePolicy{}, TiePolicy::seeded_random(5)}) {
      const auto eq1 = dump(oracle::equivalence_suite(space, tie, {1}));
      const auto eq4 = dump(oracle::equivalence_suite(space, tie, {4}));
      const auto eq0 = dump(oracle::equivalence_suite(space, tie, {0}));
      o.require(eq1 == eq4 && eq1 == eq0, "equivalence report differs");
      const auto b1 = dump(oracle::bias_montecarlo(space, tie, {1}));
      const auto b4 = dump(oracle::bias_montecarlo(space, tie, {4}));
      const auto b0 = dump(oracle::bias_montecarlo(space, tie, {0}));
      o.require(b1 == b4 && b1 == b0, "bias report differs");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
