#pragma once

#include <stdexcept>
#include <string>

namespace trijc {

// Failures of a numerical procedure on otherwise valid input. Argument and
// range problems use std::invalid_argument.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The state has support on an excitation sector outside the truncated
// Fock space, so the dynamics would no longer be exact.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace trijc
