#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace nicholson {

/// Value of a special function together with the numerical method's
/// estimate of its absolute error.
struct EvalResult {
  double value = std::numeric_limits<double>::quiet_NaN();
  double abs_err_est = 0.0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Odd order passed to a function defined for even orders only.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Quadrature or series did not reach its tolerance. Carries the last
/// estimate that was available.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, EvalResult partial)
      : Error(what), partial_(partial) {}
  const EvalResult& partial() const noexcept { return partial_; }

 private:
  EvalResult partial_;
};

class NoExtremumError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace nicholson
