#ifndef MRD_ERROR_HPP
#define MRD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrd {

enum class ErrorKind {
  // series
  DivisionByHigherValuation,
  CompositionWithUnitConstantTerm,
  NotCompositionallyInvertible,
  ValuationNotDivisible,
  LeadingCoefficientNotPerfectPower,
  IndexBeyondTruncation,
  // arrays
  InsufficientTruncation,
  InvalidSpec,
  KindMismatch,
  EllMismatch,
  ResidueOutOfRange,
  GradingViolation,
  NotTriangularInvertible,
  IndexOutOfRange,
  // resources
  BudgetExceeded,
  // expression language
  SyntaxError,
  UnknownFunction,
  ArityError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. `kind()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A mathematical precondition did not hold (non-invertible series, bad valuation, ...).
class MathError : public Error {
 public:
  MathError(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

/// An exhaustive computation would exceed its configured budget.
class BudgetError : public Error {
 public:
  BudgetError(std::size_t needed, std::size_t budget);

  std::size_t needed() const noexcept { return needed_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t needed_;
  std::size_t budget_;
};

/// Malformed generating-function expression. `position()` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message,
             std::vector<std::string> expected = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw MathError(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace mrd

#endif  // MRD_ERROR_HPP
