#pragma once

#include <stdexcept>
#include <string>

namespace pgreedy {

/// Malformed arguments: dimension mismatch, empty inputs, bad ids.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs that make a kernel system singular (duplicate points).
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

/// A Newton pivot collapsed below the breakdown floor.
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense factorization failed or produced an unusable radicand.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few points in a fit window.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment configuration that cannot be run.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgreedy
