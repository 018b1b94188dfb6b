#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apportion/apportion.hpp"

namespace apportion::cli {

enum class OutputFormat { table, json };
enum class SuiteKind { equivalence, bias, paradox };

struct RunConfig {
  std::optional<Method> method;
  std::optional<Form> form;
  Seats seats = 0;
  TiePolicy tie;
  std::string districts_col = "districts";
  std::optional<Seats> cap;
  std::optional<Seats> fixed_extra;
  StopRule::Kind stop = StopRule::Kind::residual;
  /// Rounding threshold for multiplicative Sainte-Lague variants.
  std::optional<Rational> threshold;
  MultiplicativeEngine engine = MultiplicativeEngine::threshold;
  bool compare = false;
  bool trace = false;
  OutputFormat format = OutputFormat::table;

  std::optional<SuiteKind> suite;
  oracle::InstanceSpace space;
  unsigned threads = 1;

  std::string input_path;  // "-" reads stdin
};

struct ParsedInput {
  VoteTally tally;
  std::optional<SeedDistribution> seed;
};

/// Parses `party,votes[,<districts_col>]` text. The delimiter (',', ';' or
/// tab) is taken from the header line. Errors carry the 1-based line number.
ParsedInput parse_votes(std::string_view text, std::string_view districts_col = "districts");

/// Checks flag combinations; throws InvalidInput.
void validate(const RunConfig& config, const std::optional<ParsedInput>& input);

/// Runs the configured operation and renders the report.
std::string run(const RunConfig& config, const std::optional<ParsedInput>& input);

/// Full command-line entry point. Exit codes: 0 success, 1 input error,
/// 2 execution error.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace apportion::cli
