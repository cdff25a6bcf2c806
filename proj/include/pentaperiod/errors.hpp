#pragma once

#include <stdexcept>
#include <string>

namespace pentaperiod {

/// Malformed or degenerate input (CLI exit code 2).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure could not reach its target (CLI exit code 3).
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pentaperiod
