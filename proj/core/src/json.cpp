#include "apportion/json.hpp"

#include "apportion/errors.hpp"

namespace apportion {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Method method_from(const json& j) {
  auto m = parse_method(j.get<std::string>());
  if (!m) throw InvalidInput("unknown method " + j.dump());
  return *m;
}

Form form_from(const json& j) {
  auto f = parse_form(j.get<std::string>());
  if (!f) throw InvalidInput("unknown form " + j.dump());
  return *f;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = json{{"num", r.num()}, {"den", r.den()}}; }

void from_json(const json& j, Rational& r) {
  r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const TiePolicy& t) {
  j = json{{"mode", to_string(t.mode)}};
  if (t.mode == TiePolicy::Mode::seeded_random) j["seed"] = t.seed;
}

void from_json(const json& j, TiePolicy& t) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "deterministic") {
    t = TiePolicy::deterministic();
  } else if (mode == "random") {
    t = TiePolicy::seeded_random(j.at("seed").get<std::uint64_t>());
  } else {
    throw InvalidInput("unknown tie mode " + mode);
  }
}

void to_json(json& j, const TieEvent& e) {
  j = json{{"stage", e.stage}, {"step", opt(e.step)}, {"value", e.value},
           {"tied", e.tied},   {"chosen", e.chosen}};
}

void from_json(const json& j, TieEvent& e) {
  e.stage = j.at("stage").get<std::string>();
  e.step = get_opt<std::int64_t>(j, "step");
  e.value = j.at("value").get<Rational>();
  e.tied = j.at("tied").get<std::vector<std::size_t>>();
  e.chosen = j.at("chosen").get<std::vector<std::size_t>>();
}

void to_json(json& j, const Allocation& a) {
  j = json{{"method", to_string(a.method)}, {"form", to_string(a.form)},
           {"house_size", a.house_size},    {"seats", a.seats},
           {"tie_events", a.tie_events}};
}

void from_json(const json& j, Allocation& a) {
  a.method = method_from(j.at("method"));
  a.form = form_from(j.at("form"));
  a.house_size = j.at("house_size").get<Seats>();
  a.seats = j.at("seats").get<std::vector<Seats>>();
  a.tie_events = j.at("tie_events").get<std::vector<TieEvent>>();
}

void to_json(json& j, const DivisorStep& s) {
  json present = json::array();
  for (const auto& p : s.present) present.push_back(opt(p));
  j = json{{"step", s.step},   {"winner", s.winner},  {"winning_bid", s.winning_bid},
           {"seats", s.seats}, {"present", present}, {"next", s.next}};
}

void from_json(const json& j, DivisorStep& s) {
  s.step = j.at("step").get<std::int64_t>();
  s.winner = j.at("winner").get<std::size_t>();
  s.winning_bid = j.at("winning_bid").get<Rational>();
  s.seats = j.at("seats").get<std::vector<Seats>>();
  s.present.clear();
  for (const auto& p : j.at("present"))
    s.present.push_back(p.is_null() ? std::nullopt : std::optional<Rational>(p.get<Rational>()));
  s.next = j.at("next").get<std::vector<Rational>>();
}

void to_json(json& j, const MultiplierStep& s) {
  j = json{{"action", s.action}, {"multiplier", s.multiplier}, {"seats", s.seats}, {"total", s.total}};
}

void from_json(const json& j, MultiplierStep& s) {
  s.action = j.at("action").get<std::string>();
  s.multiplier = j.at("multiplier").get<Rational>();
  s.seats = j.at("seats").get<std::vector<Seats>>();
  s.total = j.at("total").get<Seats>();
}

void to_json(json& j, const TraceTable& t) {
  j = json{{"method", to_string(t.method)},
           {"form", to_string(t.form)},
           {"rounding_threshold", t.rounding_threshold},
           {"initial_bids", t.initial_bids},
           {"steps", t.steps},
           {"multipliers", t.multipliers},
           {"quota", opt(t.quota)},
           {"reciprocal", opt(t.reciprocal)},
           {"multiplier", opt(t.multiplier)},
           {"witness_exact", t.witness_exact}};
}

void from_json(const json& j, TraceTable& t) {
  t.method = method_from(j.at("method"));
  t.form = form_from(j.at("form"));
  t.rounding_threshold = j.at("rounding_threshold").get<Rational>();
  t.initial_bids = j.at("initial_bids").get<std::vector<Rational>>();
  t.steps = j.at("steps").get<std::vector<DivisorStep>>();
  t.multipliers = j.at("multipliers").get<std::vector<MultiplierStep>>();
  t.quota = get_opt<Rational>(j, "quota");
  t.reciprocal = get_opt<Rational>(j, "reciprocal");
  t.multiplier = get_opt<Rational>(j, "multiplier");
  t.witness_exact = j.at("witness_exact").get<bool>();
}

void to_json(json& j, const SequentialAward& a) {
  j = json{{"step", a.step}, {"winner", a.winner}, {"deficit", a.deficit}};
}

void from_json(const json& j, SequentialAward& a) {
  a.step = j.at("step").get<std::int64_t>();
  a.winner = j.at("winner").get<std::size_t>();
  a.deficit = j.at("deficit").get<Rational>();
}

void to_json(json& j, const SeededStep& s) {
  j = json{{"iteration", s.iteration}, {"multiplier", opt(s.multiplier)},
           {"deficits", s.deficits},   {"winner", opt(s.winner)},
           {"totals", s.totals}};
}

void from_json(const json& j, SeededStep& s) {
  s.iteration = j.at("iteration").get<std::int64_t>();
  s.multiplier = get_opt<Rational>(j, "multiplier");
  s.deficits = j.at("deficits").get<std::vector<Rational>>();
  s.winner = get_opt<std::size_t>(j, "winner");
  s.totals = j.at("totals").get<std::vector<Seats>>();
}

void to_json(json& j, const SeededRun& r) {
  j = json{{"method", to_string(r.method)},
           {"form", to_string(r.form)},
           {"district", r.district},
           {"extra", r.extra},
           {"totals", r.totals},
           {"iterations", r.iterations},
           {"stop_reason", to_string(r.stop_reason)},
           {"deassigned", r.deassigned},
           {"multiplier", opt(r.multiplier)},
           {"final_residuals", r.final_residuals},
           {"log", r.log},
           {"tie_events", r.tie_events}};
}

void from_json(const json& j, SeededRun& r) {
  r.method = method_from(j.at("method"));
  r.form = form_from(j.at("form"));
  r.district = j.at("district").get<std::vector<Seats>>();
  r.extra = j.at("extra").get<std::vector<Seats>>();
  r.totals = j.at("totals").get<std::vector<Seats>>();
  r.iterations = j.at("iterations").get<std::int64_t>();
  auto reason = parse_stop_reason(j.at("stop_reason").get<std::string>());
  if (!reason) throw InvalidInput("unknown stop reason");
  r.stop_reason = *reason;
  r.deassigned = j.at("deassigned").get<bool>();
  r.multiplier = get_opt<Rational>(j, "multiplier");
  r.final_residuals = j.at("final_residuals").get<std::vector<Rational>>();
  r.log = j.at("log").get<std::vector<SeededStep>>();
  r.tie_events = j.at("tie_events").get<std::vector<TieEvent>>();
}

void to_json(json& j, const QuotaReport& q) {
  json parties = json::array();
  for (const auto& p : q.parties)
    parties.push_back({{"ideal", p.ideal}, {"lower", p.lower}, {"upper", p.upper}});
  j = json{{"house_size", q.house_size}, {"ideal_quota", opt(q.ideal_quota)}, {"parties", parties}};
}

json tally_to_json(const VoteTally& tally) {
  json parties = json::array();
  for (const auto& p : tally.parties()) parties.push_back({{"id", p.id}, {"votes", p.votes}});
  return json{{"parties", parties}, {"total_votes", tally.total()}};
}

namespace oracle {

void to_json(json& j, const InstanceSpace& s) {
  j = json{{"parties", {s.min_parties, s.max_parties}},
           {"votes", {s.min_votes, s.max_votes}},
           {"house_size", {s.min_house, s.max_house}},
           {"trials", s.trials},
           {"master_seed", s.master_seed}};
}

void to_json(json& j, const Instance& i) {
  j = json{{"votes", i.votes}, {"house_size", i.house_size}};
}

void to_json(json& j, const Witness& w) {
  j = json{{"kind", w.kind},   {"method", to_string(w.method)}, {"instance", w.instance},
           {"seats", w.seats}, {"seats_after", w.seats_after},  {"party", w.party},
           {"detail", w.detail}};
}

void to_json(json& j, const Disagreement& d) {
  j = json{{"trial", d.trial}, {"instance", d.instance}, {"check", d.check},
           {"lhs", d.lhs},     {"rhs", d.rhs}};
}

void to_json(json& j, const SuiteReport& r) {
  json stats = json::object();
  for (const auto& [k, v] : r.statistics) stats[k] = v;
  j = json{{"suite", r.suite},
           {"space", r.space},
           {"tie", r.tie},
           {"trials", r.trials},
           {"agreements", r.agreements},
           {"disagreements", r.disagreements},
           {"counterexamples", r.counterexamples},
           {"witnesses", r.witnesses},
           {"statistics", stats}};
}

}  // namespace oracle
}  // namespace apportion
