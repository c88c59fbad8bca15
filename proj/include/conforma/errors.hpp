#pragma once

#include <stdexcept>
#include <string>

namespace conforma {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller-declared hypothesis (smoothness, dimensions) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation hit a point where its formula is singular.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A limit (endpoint value, extrapolation) failed to settle.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An improper integral does not converge for the requested parameters.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature could not meet its tolerance within the subdivision budget.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

}  // namespace conforma
