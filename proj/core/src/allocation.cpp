#include "apportion/allocation.hpp"

#include <numeric>

namespace apportion {

std::string to_string(Method m) {
  switch (m) {
    case Method::hare: return "hare";
    case Method::dhondt: return "dhondt";
    case Method::sainte_lague: return "sainte-lague";
  }
  return "unknown";
}

std::string to_string(Form f) {
  switch (f) {
    case Form::divisor: return "divisor";
    case Form::multiplicative: return "multiplicative";
    case Form::sequential: return "sequential";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "hare") return Method::hare;
  if (s == "dhondt") return Method::dhondt;
  if (s == "sainte-lague") return Method::sainte_lague;
  return std::nullopt;
}

std::optional<Form> parse_form(std::string_view s) {
  if (s == "divisor") return Form::divisor;
  if (s == "multiplicative") return Form::multiplicative;
  if (s == "sequential") return Form::sequential;
  return std::nullopt;
}

Seats Allocation::total() const { return std::accumulate(seats.begin(), seats.end(), Seats{0}); }

}  // namespace apportion
