#ifndef MRD_RATIONAL_HPP
#define MRD_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace mrd {

// Expression templates are disabled so the types behave as plain values inside Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;

/// Canonical text form: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// The positive rational r with r^k == q, if one exists.
std::optional<Rational> exact_root(const Rational& q, unsigned k);

Rational pow(const Rational& base, long exponent);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for any rational x.
Rational binomial(const Rational& x, long k);

/// Exact-root customization point for generic scalars; see Series::ell_root.
template <typename Scalar>
std::optional<Scalar> scalar_root(const Scalar& value, unsigned k) {
  return exact_root(value, k);
}

}  // namespace mrd

#endif  // MRD_RATIONAL_HPP
