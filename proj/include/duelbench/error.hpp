#pragma once

#include <stdexcept>
#include <string>

namespace duelbench {

// Bad input: malformed matrices, invalid parameters, config problems.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures that depend on the environment or on search budgets (I/O,
// rejection sampling exhausted).
class RuntimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace duelbench
