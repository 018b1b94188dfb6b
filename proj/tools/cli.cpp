#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "apportion/json.hpp"

namespace apportion::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

InvalidInput line_error(std::size_t line, const std::string& what) {
  return InvalidInput("line " + std::to_string(line) + ": " + what);
}

// Splits one record; double quotes protect delimiters, "" is a literal quote.
std::vector<std::string> split_record(std::string_view line, char delim, std::size_t lineno) {
  std::vector<std::string> cols;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (c == delim && !quoted) {
      cols.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw line_error(lineno, "unterminated quote");
  cols.push_back(std::move(cur));
  return cols;
}

std::int64_t parse_count(const std::string& field, std::size_t lineno, const char* what) {
  const std::string s = trim(field);
  if (s.empty()) throw line_error(lineno, std::string("missing ") + what);
  if (s.front() == '-') throw line_error(lineno, std::string("negative ") + what + " '" + s + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw line_error(lineno, std::string(what) + " '" + s + "' is not a non-negative integer");
    if (v > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10)
      throw line_error(lineno, std::string(what) + " '" + s + "' is too large");
    v = v * 10 + (c - '0');
  }
  return v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidInput("cannot parse rational '" + text + "'");
  }
}

std::string seats_row(const VoteTally& tally, const std::vector<Seats>& seats) {
  std::string out;
  for (std::size_t i = 0; i < seats.size(); ++i) {
    if (i) out += ", ";
    out += tally.id(i) + " " + std::to_string(seats[i]);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

std::size_t id_width(const VoteTally& tally) {
  std::size_t w = 6;
  for (const auto& p : tally.parties()) w = std::max(w, p.id.size() + 2);
  return w;
}

json config_json(const RunConfig& c) {
  json j{{"tie", c.tie}, {"format", c.format == OutputFormat::json ? "json" : "table"}};
  if (c.suite) {
    static const char* names[] = {"equivalence", "bias", "paradox"};
    j["suite"] = names[static_cast<int>(*c.suite)];
    j["space"] = c.space;
    return j;
  }
  j["method"] = c.method ? json(to_string(*c.method)) : json(nullptr);
  j["form"] = c.form ? json(to_string(*c.form)) : json(nullptr);
  j["seats"] = c.seats;
  j["compare"] = c.compare;
  j["trace"] = c.trace;
  j["engine"] = c.engine == MultiplicativeEngine::threshold ? "threshold" : "sweep";
  if (c.threshold) j["threshold"] = *c.threshold;
  if (c.cap) j["cap"] = *c.cap;
  if (c.fixed_extra) j["fixed_extra"] = *c.fixed_extra;
  j["stop"] = c.stop == StopRule::Kind::residual ? "residual" : "fixed";
  return j;
}

struct MethodRun {
  Allocation allocation;
  std::optional<TraceTable> trace;
  std::vector<SequentialAward> awards;
};

RoundingRule rounding_for(Method m, const RunConfig& c) {
  if (m == Method::dhondt) return RoundingRule::floor();
  return RoundingRule(c.threshold.value_or(Rational(1, 2)));
}

MethodRun run_method(Method m, Form form, const RunConfig& c, const VoteTally& tally) {
  MethodRun r;
  if (m == Method::hare) {
    if (form == Form::sequential) {
      auto res = sequential_hare(tally, c.seats, c.tie);
      r.allocation = std::move(res.allocation);
      r.awards = std::move(res.events);
    } else {
      r.allocation = hare_niemeyer(tally, c.seats, c.tie, form);
    }
    return r;
  }
  TracedAllocation res =
      form == Form::divisor
          ? highest_averages(tally, c.seats,
                             m == Method::dhondt ? DivisorRule::dhondt : DivisorRule::sainte_lague,
                             c.tie, c.trace)
          : multiplicative(tally, c.seats, rounding_for(m, c), c.tie, c.engine, c.trace);
  r.allocation = std::move(res.allocation);
  r.trace = std::move(res.trace);
  return r;
}

Form default_form(Method m) { return m == Method::hare ? Form::multiplicative : Form::divisor; }

// ---------------------------------------------------------------------------
// table rendering

void render_quota_table(std::ostream& os, const VoteTally& tally, const QuotaReport& q,
                        const std::vector<std::pair<std::string, const std::vector<Seats>*>>& cols,
                        bool mark_differences) {
  const std::size_t w = id_width(tally);
  os << pad("party", w) << pad("votes", 12) << pad("ideal(approx)", 15) << pad("lower", 7)
     << pad("upper", 7);
  for (const auto& [name, _] : cols) os << pad(name, 14);
  os << "\n";
  for (std::size_t i = 0; i < tally.size(); ++i) {
    os << pad(tally.id(i), w) << pad(std::to_string(tally.votes(i)), 12)
       << pad(q.parties[i].ideal.to_decimal(), 15) << pad(std::to_string(q.parties[i].lower), 7)
       << pad(std::to_string(q.parties[i].upper), 7);
    bool differs = false;
    for (const auto& [name, seats] : cols) {
      os << pad(std::to_string((*seats)[i]), 14);
      differs = differs || (*seats)[i] != (*cols.front().second)[i];
    }
    if (mark_differences && differs) os << "*";
    os << "\n";
  }
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->to_string() : "-"; }

void render_trace(std::ostream& os, const VoteTally& tally, const MethodRun& run) {
  if (!run.awards.empty()) {
    os << "\nsequential awards\n";
    for (const auto& a : run.awards)
      os << "  step " << a.step << ": seat to " << tally.id(a.winner) << " (deficit "
         << a.deficit.to_string() << ")\n";
    return;
  }
  if (!run.trace) return;
  const TraceTable& t = *run.trace;
  const std::size_t w = 16;
  if (t.form == Form::divisor) {
    os << "\ndivisor table\n";
    os << "  " << pad("", w);
    for (std::size_t i = 0; i < tally.size(); ++i) os << pad(tally.id(i), w);
    os << "\n  " << pad("next quota", w);
    for (const auto& b : t.initial_bids) os << pad(b.to_string(), w);
    os << "\n";
    for (const auto& s : t.steps) {
      os << "step " << s.step << ": seat to " << tally.id(s.winner) << " (bid "
         << s.winning_bid.to_string() << ")\n";
      os << "  " << pad("seats", w);
      for (Seats n : s.seats) os << pad(std::to_string(n), w);
      os << "\n  " << pad("present quota", w);
      for (const auto& p : s.present) os << pad(opt_str(p), w);
      os << "\n  " << pad("next quota", w);
      for (const auto& n : s.next) os << pad(n.to_string(), w);
      os << "\n";
    }
  } else {
    os << "\nmultiplier sweep (rounding threshold " << t.rounding_threshold.to_string() << ")\n";
    os << "  " << pad("action", 12) << pad("M", 20) << pad("total", 7) << "seats\n";
    for (const auto& m : t.multipliers) {
      os << "  " << pad(m.action, 12) << pad(m.multiplier.to_string(), 20)
         << pad(std::to_string(m.total), 7);
      for (std::size_t i = 0; i < m.seats.size(); ++i) os << (i ? " " : "") << m.seats[i];
      os << "\n";
    }
  }
  os << "quota q = " << opt_str(t.quota) << ", Q = 1/q = " << opt_str(t.reciprocal)
     << ", multiplier M = " << opt_str(t.multiplier);
  if (!t.witness_exact) os << " (reached by de-assignment)";
  os << "\n";
}

void render_ties(std::ostream& os, const VoteTally& tally, const std::vector<TieEvent>& events) {
  for (const auto& e : events) {
    os << "tie (" << e.stage;
    if (e.step) os << ", step " << *e.step;
    os << ") at " << e.value.to_string() << ": ";
    for (std::size_t i = 0; i < e.tied.size(); ++i) os << (i ? "," : "") << tally.id(e.tied[i]);
    os << " -> ";
    for (std::size_t i = 0; i < e.chosen.size(); ++i) os << (i ? "," : "") << tally.id(e.chosen[i]);
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

std::string run_suite(const RunConfig& c) {
  oracle::SuiteReport rep;
  const oracle::Parallelism par{c.threads};
  switch (*c.suite) {
    case SuiteKind::equivalence: rep = oracle::equivalence_suite(c.space, c.tie, par); break;
    case SuiteKind::bias: rep = oracle::bias_montecarlo(c.space, c.tie, par); break;
    case SuiteKind::paradox: rep = oracle::paradox_suite(c.space, c.tie); break;
  }
  if (c.format == OutputFormat::json)
    return json{{"config", config_json(c)}, {"report", rep}}.dump(2) + "\n";

  std::ostringstream os;
  os << "suite: " << rep.suite << "\n"
     << "trials: " << rep.trials << "\n"
     << "agreements: " << rep.agreements << "\n"
     << "disagreements: " << rep.disagreements << "\n";
  for (const auto& d : rep.counterexamples) {
    os << "  counterexample (trial " << d.trial << ", " << d.check << "): votes";
    for (Votes v : d.instance.votes) os << " " << v;
    os << ", house " << d.instance.house_size << "\n";
  }
  for (const auto& w : rep.witnesses) {
    os << "witness " << w.kind << " [" << to_string(w.method) << "]: votes";
    for (Votes v : w.instance.votes) os << " " << v;
    os << ", house " << w.instance.house_size << ", party " << w.party + 1 << " " << w.detail
       << "\n";
  }
  if (!rep.statistics.empty()) os << "statistics:\n";
  for (const auto& [k, v] : rep.statistics)
    os << "  " << pad(k, 40) << v.to_string() << "  (approx " << v.to_decimal() << ")\n";
  return os.str();
}

std::string run_seeded(const RunConfig& c, const ParsedInput& in) {
  const Method m = c.method.value_or(Method::hare);
  SeedDistribution seed = *in.seed;
  SeededRun run;
  if (m == Method::hare) {
    seed.cap = c.cap;
    seed.fixed_extra = c.fixed_extra;
    run = seeded_sequential_hare(in.tally, seed, c.tie);
  } else {
    const StopRule stop = c.stop == StopRule::Kind::fixed ? StopRule::fixed(*c.fixed_extra)
                                                          : StopRule::residual();
    run = seeded_divisor(in.tally, seed, rounding_for(m, c), stop, c.tie);
  }

  Allocation alloc;
  alloc.method = run.method;
  alloc.form = run.form;
  alloc.seats = run.totals;
  alloc.house_size = alloc.total();
  alloc.tie_events = run.tie_events;
  const QuotaReport q = compute_quotas(in.tally, alloc.house_size);

  if (c.format == OutputFormat::json) {
    json j{{"config", config_json(c)},
           {"tally", tally_to_json(in.tally)},
           {"allocations", json::array({alloc})},
           {"quota_report", q},
           {"tie_events", run.tie_events},
           {"seeded_run", run}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  const std::size_t w = id_width(in.tally);
  os << "seeded: " << to_string(run.method) << " (" << to_string(run.form) << ")  D=" << seed.total()
     << "  J=" << run.iterations << "  stop: " << to_string(run.stop_reason);
  if (run.multiplier) os << "  M=" << run.multiplier->to_string();
  if (run.deassigned) os << "  (target reached by de-assignment)";
  os << "\n"
     << pad("party", w) << pad("votes", 12) << pad("districts", 11) << pad("extra", 7)
     << pad("total", 7) << "residual\n";
  for (std::size_t i = 0; i < in.tally.size(); ++i)
    os << pad(in.tally.id(i), w) << pad(std::to_string(in.tally.votes(i)), 12)
       << pad(std::to_string(run.district[i]), 11) << pad(std::to_string(run.extra[i]), 7)
       << pad(std::to_string(run.totals[i]), 7) << run.final_residuals[i].to_string() << "\n";
  os << "allocation: " << seats_row(in.tally, run.totals) << "\n";
  if (c.trace) {
    os << "\nlog\n";
    for (const auto& s : run.log) {
      os << "  " << s.iteration;
      if (s.multiplier) os << "  M=" << s.multiplier->to_string();
      if (s.winner) os << "  seat to " << in.tally.id(*s.winner);
      os << "  totals";
      for (Seats t : s.totals) os << " " << t;
      os << "\n";
    }
  }
  render_ties(os, in.tally, run.tie_events);
  return os.str();
}

std::string run_plain(const RunConfig& c, const ParsedInput& in) {
  const VoteTally& tally = in.tally;
  std::vector<MethodRun> runs;
  if (c.compare) {
    for (Method m : {Method::hare, Method::dhondt, Method::sainte_lague}) {
      Form f = c.form.value_or(default_form(m));
      if (m != Method::hare && f == Form::sequential) f = Form::divisor;
      runs.push_back(run_method(m, f, c, tally));
    }
  } else {
    runs.push_back(run_method(*c.method, c.form.value_or(default_form(*c.method)), c, tally));
  }
  const QuotaReport q = compute_quotas(tally, c.seats);

  if (c.format == OutputFormat::json) {
    json allocs = json::array();
    json ties = json::array();
    for (const auto& r : runs) {
      allocs.push_back(r.allocation);
      for (const auto& e : r.allocation.tie_events) ties.push_back(e);
    }
    json j{{"config", config_json(c)},
           {"tally", tally_to_json(tally)},
           {"allocations", allocs},
           {"quota_report", q},
           {"tie_events", ties}};
    if (c.trace && !c.compare) {
      if (runs.front().trace) j["trace"] = *runs.front().trace;
      if (!runs.front().awards.empty()) j["trace"] = json{{"sequential_awards", runs.front().awards}};
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  std::vector<std::pair<std::string, const std::vector<Seats>*>> cols;
  for (const auto& r : runs) cols.emplace_back(to_string(r.allocation.method), &r.allocation.seats);
  if (c.compare) {
    os << "compare  house: " << c.seats << "  tie: " << to_string(c.tie.mode) << "\n";
  } else {
    const auto& a = runs.front().allocation;
    os << "method: " << to_string(a.method) << " (" << to_string(a.form) << ")  house: " << c.seats
       << "  tie: " << to_string(c.tie.mode) << "\n";
  }
  render_quota_table(os, tally, q, cols, c.compare);
  for (const auto& r : runs)
    os << (c.compare ? to_string(r.allocation.method) + ": " : std::string("allocation: "))
       << seats_row(tally, r.allocation.seats) << "\n";
  if (c.compare) os << "(* marks parties whose seats differ between methods)\n";
  if (c.trace && !c.compare) render_trace(os, tally, runs.front());
  for (const auto& r : runs) render_ties(os, tally, r.allocation.tie_events);
  return os.str();
}

}  // namespace

ParsedInput parse_votes(std::string_view text, std::string_view districts_col) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string line(text.substr(pos, nl - pos));
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) lines.emplace_back(lineno, std::move(line));
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw InvalidInput("empty input");
  if (lines.front().second.rfind("\xEF\xBB\xBF", 0) == 0) lines.front().second.erase(0, 3);

  const auto& [header_line, header] = lines.front();
  char delim = ',';
  for (char d : {',', ';', '\t'})
    if (header.find(d) != std::string::npos) {
      delim = d;
      break;
    }
  const auto head = split_record(header, delim, header_line);
  if (head.size() < 2 || head.size() > 3 || lower(trim(head[0])) != "party" ||
      lower(trim(head[1])) != "votes")
    throw line_error(header_line, "expected header 'party,votes[," + std::string(districts_col) + "]'");
  const bool has_districts = head.size() == 3;
  if (has_districts && lower(trim(head[2])) != lower(std::string(districts_col)))
    throw line_error(header_line, "unknown column '" + trim(head[2]) + "'");

  std::vector<Party> parties;
  std::vector<Seats> districts;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [lineno, line] = lines[r];
    const auto cols = split_record(line, delim, lineno);
    if (cols.size() != head.size())
      throw line_error(lineno, "expected " + std::to_string(head.size()) + " fields, found " +
                                   std::to_string(cols.size()));
    if (cols[0].empty()) throw line_error(lineno, "empty party id");
    if (!seen.insert(cols[0]).second) throw line_error(lineno, "duplicate party '" + cols[0] + "'");
    parties.push_back({cols[0], parse_count(cols[1], lineno, "votes")});
    if (has_districts) districts.push_back(parse_count(cols[2], lineno, "districts"));
  }
  if (parties.empty()) throw InvalidInput("no party rows");

  ParsedInput out{VoteTally(std::move(parties)), std::nullopt};
  if (has_districts) out.seed = SeedDistribution{std::move(districts), std::nullopt, std::nullopt};
  return out;
}

void validate(const RunConfig& c, const std::optional<ParsedInput>& input) {
  if (c.suite) {
    c.space.validate();
    return;
  }
  if (!input) throw InvalidInput("no input file given");
  if (c.seats < 0) throw InvalidInput("--seats must be non-negative");
  if (c.compare && c.method) throw InvalidInput("--compare runs every method; drop --method");
  if (!c.compare && !c.method && !input->seed) throw InvalidInput("--method is required");
  if (c.method && c.form == Form::sequential && *c.method != Method::hare)
    throw InvalidInput("the sequential form exists only for hare");
  if (c.threshold && (!c.method || *c.method != Method::sainte_lague))
    throw InvalidInput("--threshold applies to sainte-lague only");
  if (c.threshold) RoundingRule{*c.threshold};  // range check

  const bool seeded_flags = c.cap || c.fixed_extra || c.stop == StopRule::Kind::fixed;
  if (input->seed) {
    if (c.compare) throw InvalidInput("--compare is not available for seeded runs");
    const Method m = c.method.value_or(Method::hare);
    if (m == Method::hare) {
      if (c.form && *c.form != Form::sequential)
        throw InvalidInput("seeded hare runs in the sequential form");
      if (c.cap && c.fixed_extra) throw InvalidInput("--cap and --fixed-extra are mutually exclusive");
      if (c.stop == StopRule::Kind::fixed && !c.fixed_extra)
        throw InvalidInput("--stop fixed needs --fixed-extra");
    } else {
      if (c.cap) throw InvalidInput("--cap applies to seeded hare only");
      if (c.stop == StopRule::Kind::fixed && !c.fixed_extra)
        throw InvalidInput("--stop fixed needs --fixed-extra");
      if (c.stop == StopRule::Kind::residual && c.fixed_extra)
        throw InvalidInput("--fixed-extra needs --stop fixed for divisor methods");
    }
  } else if (seeded_flags) {
    throw InvalidInput("--cap/--fixed-extra/--stop need a districts column in the input");
  }
}

std::string run(const RunConfig& config, const std::optional<ParsedInput>& input) {
  validate(config, input);
  if (config.suite) return run_suite(config);
  if (input->seed) return run_seeded(config, *input);
  return run_plain(config, *input);
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Exact proportional-representation seat apportionment"};
  RunConfig c;
  std::string method, form, tie = "deterministic", stop = "residual", format = "table", suite,
                               engine = "threshold", threshold;
  std::optional<std::uint64_t> seed;
  app.add_option("input", c.input_path, "Vote file (party,votes[,districts]); '-' for stdin");
  app.add_option("--method", method, "hare | dhondt | sainte-lague")
      ->check(CLI::IsMember({"hare", "dhondt", "sainte-lague"}));
  app.add_option("--form", form, "divisor | multiplicative | sequential")
      ->check(CLI::IsMember({"divisor", "multiplicative", "sequential"}));
  app.add_option("--seats", c.seats, "House size N");
  app.add_option("--tie", tie, "deterministic | random")
      ->check(CLI::IsMember({"deterministic", "random"}));
  app.add_option("--seed", seed, "Seed for --tie random");
  app.add_option("--districts-col", c.districts_col, "Name of the district-seat column");
  app.add_option("--cap", c.cap, "Maximum additional seats (seeded hare)");
  app.add_option("--fixed-extra", c.fixed_extra, "Exact number of additional seats");
  app.add_option("--stop", stop, "residual | fixed")->check(CLI::IsMember({"residual", "fixed"}));
  app.add_option("--threshold", threshold, "Rounding threshold p/q for sainte-lague (default 1/2)");
  app.add_option("--engine", engine, "threshold | sweep (multiplicative form)")
      ->check(CLI::IsMember({"threshold", "sweep"}));
  app.add_flag("--compare", c.compare, "Run all methods side by side");
  app.add_flag("--trace", c.trace, "Print the divisor table or multiplier sweep");
  app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--suite", suite, "equivalence | bias | paradox")
      ->check(CLI::IsMember({"equivalence", "bias", "paradox"}));
  app.add_option("--trials", c.space.trials, "Suite trials");
  app.add_option("--master-seed", c.space.master_seed, "Suite master seed");
  auto* min_parties = app.add_option("--min-parties", c.space.min_parties, "Suite party-count minimum");
  auto* max_parties = app.add_option("--max-parties", c.space.max_parties, "Suite party-count maximum");
  app.add_option("--min-votes", c.space.min_votes, "Suite vote minimum");
  auto* max_votes = app.add_option("--max-votes", c.space.max_votes, "Suite vote maximum");
  auto* min_seats = app.add_option("--min-seats", c.space.min_house, "Suite house-size minimum");
  auto* max_seats = app.add_option("--max-seats", c.space.max_house, "Suite house-size maximum");
  app.add_option("--threads", c.threads, "Suite worker threads (0 = all cores)");

  std::vector<const char*> argv{"apportion"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (!method.empty()) c.method = parse_method(method);
    if (!form.empty()) c.form = parse_form(form);
    if (tie == "random") {
      if (!seed) throw InvalidInput("--tie random needs --seed");
      c.tie = TiePolicy::seeded_random(*seed);
    } else if (seed) {
      throw InvalidInput("--seed only applies to --tie random");
    }
    c.stop = stop == "fixed" ? StopRule::Kind::fixed : StopRule::Kind::residual;
    c.format = format == "json" ? OutputFormat::json : OutputFormat::table;
    c.engine = engine == "sweep" ? MultiplicativeEngine::sweep : MultiplicativeEngine::threshold;
    if (!threshold.empty()) c.threshold = parse_rational(threshold);

    if (!suite.empty()) {
      c.suite = suite == "equivalence" ? SuiteKind::equivalence
                : suite == "bias"      ? SuiteKind::bias
                                       : SuiteKind::paradox;
      if (*c.suite == SuiteKind::paradox) {
        // exhaustive small space unless overridden
        if (min_parties->count() == 0) c.space.min_parties = 3;
        if (max_parties->count() == 0) c.space.max_parties = 4;
        if (max_votes->count() == 0) c.space.max_votes = 8;
        if (min_seats->count() == 0) c.space.min_house = 1;
        if (max_seats->count() == 0) c.space.max_house = 12;
      }
      out << run(c, std::nullopt);
      return 0;
    }

    if (c.input_path.empty()) throw InvalidInput("no input file given");
    std::string text;
    if (c.input_path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(c.input_path, std::ios::binary);
      if (!f) throw InvalidInput("cannot open " + c.input_path);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    out << run(c, parse_votes(text, c.districts_col));
    return 0;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "execution error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace apportion::cli
