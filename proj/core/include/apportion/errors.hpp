#pragma once

#include <stdexcept>
#include <string>

namespace apportion {

/// Malformed or inconsistent input data (bad tally, mismatched seed, bad options).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation could not complete on otherwise valid input.
class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apportion
