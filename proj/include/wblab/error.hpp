#pragma once

#include <stdexcept>
#include <string>

namespace wblab {

/// Invalid parameters (grid size, μ, admissible pair, solver settings).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands live on different grids.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oscillatory integral needs more nodes than the configured budget.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requested on an empty or otherwise unusable trajectory.
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curl-free or conjugate-pairing constraint violated.
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ratio requested with a vanishing denominator.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wblab
