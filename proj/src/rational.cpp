#include "mrd/rational.hpp"

#include <gmp.h>

#include <stdexcept>

#include "mrd/error.hpp"

namespace mrd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByHigherValuation: return "DivisionByHigherValuation";
    case ErrorKind::CompositionWithUnitConstantTerm: return "CompositionWithUnitConstantTerm";
    case ErrorKind::NotCompositionallyInvertible: return "NotCompositionallyInvertible";
    case ErrorKind::ValuationNotDivisible: return "ValuationNotDivisible";
    case ErrorKind::LeadingCoefficientNotPerfectPower: return "LeadingCoefficientNotPerfectPower";
    case ErrorKind::IndexBeyondTruncation: return "IndexBeyondTruncation";
    case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::EllMismatch: return "EllMismatch";
    case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::NotTriangularInvertible: return "NotTriangularInvertible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::ArityError: return "ArityError";
  }
  return "Error";
}

BudgetError::BudgetError(std::size_t needed, std::size_t budget)
    : Error(ErrorKind::BudgetExceeded,
            "BudgetExceeded: " + std::to_string(needed) + " minors requested, budget is " +
                std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

ParseError::ParseError(ErrorKind kind, std::size_t position, const std::string& message,
                       std::vector<std::string> expected)
    : Error(kind, std::string(to_string(kind)) + " at byte " + std::to_string(position) + ": " +
                      message),
      position_(position),
      expected_(std::move(expected)) {}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

namespace {

std::optional<Integer> exact_integer_root(const Integer& n, unsigned k) {
  if (n < 0) return std::nullopt;
  Integer root;
  if (mpz_root(root.backend().data(), n.backend().data(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return q;
  if (q.sign() < 0) return std::nullopt;
  auto num = exact_integer_root(numerator(q), k);
  auto den = exact_integer_root(denominator(q), k);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) result = result * (x - i) / (i + 1);
  return result;
}

}  // namespace mrd
