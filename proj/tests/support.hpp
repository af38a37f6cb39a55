// Shared fixtures for the test binaries: the example corpus and random spec generators.
#ifndef MRD_TESTS_SUPPORT_HPP
#define MRD_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "mrd/gfexpr.hpp"
#include "mrd/matrix.hpp"
#include "mrd/multiriordan.hpp"
#include "mrd/riordan.hpp"
#include "mrd/series.hpp"

namespace mrd::testing {

inline RationalSeries E(const std::string& expr, std::size_t order) { return gf::eval(expr, order); }

inline RationalSeries S(const std::vector<long>& coeffs) {
  RationalSeries::Coefficients c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalSeries(std::move(c));
}

inline std::vector<long> longs(const RationalSeries& s, std::size_t count) {
  std::vector<long> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(numerator(s.coeff(i)).convert_to<long>());
  return out;
}

/// True when the first coefficients of `s` are exactly `expected`.
inline bool has_prefix(const RationalSeries& s, const std::vector<long>& expected) {
  if (s.order() + 1 < expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (s[i] != Rational(expected[i])) return false;
  return true;
}

inline std::string show(const RationalSeries& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ", ") + to_string(c);
  return out;
}

/// Strided coefficients [t^{j ell}] s for j < count.
inline std::vector<long> strided_longs(const RationalSeries& s, std::size_t ell, std::size_t count) {
  std::vector<long> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(numerator(s.coeff(j * ell)).convert_to<long>());
  return out;
}

// Little and large Schroeder generating functions as written in the running examples.
inline const char* const little_schroeder = "(1+t-sqrt[2](1-6*t+t^2))/(4*t)";
inline const char* const large_schroeder = "(1-t-sqrt[2](1-6*t+t^2))/(2*t)";

inline RationalRiordan type_spec(const std::string& g, const std::string& f, std::size_t order) {
  return RationalRiordan::type(E(g, order), E(f, order));
}

inline RationalRiordan proper_spec(const std::string& g, const std::string& f, std::size_t order) {
  return RationalRiordan::proper(E(g, order), E(f, order));
}

/// The type arrays of the running Schroeder examples, keyed by a short name.
struct NamedType {
  std::string name;
  std::string g;
  std::string f;
};

inline std::vector<NamedType> schroeder_corpus() {
  const std::string s = little_schroeder;
  const std::string r = large_schroeder;
  return {
      {"(s,1)", s, "1"},
      {"(s,s)", s, s},
      {"(s,s^2)", s, "(" + s + ")^2"},
      {"(s,(s-1)/t)", s, "(" + s + "-1)/t"},
      {"(s,s(s-1)/(t(2-s)))", s, "(" + s + ")*(" + s + "-1)/(t*(2-(" + s + ")))"},
      {"(s,r)", s, r},
  };
}

inline RationalMultiRiordan example_multi(std::size_t order) {
  return RationalMultiRiordan::proper(E("1/(1-t^3)", order),
                                      {E("t/(1-t^3)", order), E("t*(1+t^3)", order), E("t/(1+t^3)", order)});
}

inline RationalMultiRiordan example_multi_type(std::size_t order) {
  return RationalMultiRiordan::type(E("1/(1-t^3)", order),
                                    {E("1/(1-t^3)", order), E("1+t^3", order), E("1/(1+t^3)", order)});
}

inline RationalMultiRiordan double_example(std::size_t order) {
  return RationalMultiRiordan::proper(E("1/(1-t^2)", order), {E("t", order), E("t/(1-t^2)", order)});
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Random series with small integer coefficients on exponents `offset + k·stride`.
  RationalSeries series(std::size_t order, std::size_t stride = 1, std::size_t offset = 0, long lead = 0) {
    RationalSeries::Coefficients c(order + 1, Rational(0));
    for (std::size_t n = offset; n <= order; n += stride) c[n] = Rational(integer(-3, 3));
    if (lead != 0 && offset <= order) c[offset] = Rational(lead);
    return RationalSeries(std::move(c));
  }

  RationalSeries valuation_one(std::size_t order) {
    long lead = 0;
    while (lead == 0) lead = integer(-3, 3);
    return series(order, 1, 1, lead);
  }

  RationalRiordan proper(std::size_t order) {
    long g0 = 0;
    while (g0 == 0) g0 = integer(-2, 3);
    return RationalRiordan::proper(series(order, 1, 0, g0), valuation_one(order));
  }

  RationalRiordan type(std::size_t order) {
    long g0 = 0, f0 = 0;
    while (g0 == 0) g0 = integer(-2, 3);
    while (f0 == 0) f0 = integer(-2, 3);
    return RationalRiordan::type(series(order, 1, 0, g0), series(order, 1, 0, f0));
  }

  /// Proper multiple spec whose multipliers share the leading coefficient c in {1, 2}, so the
  /// product has a rational ell-th root.
  RationalMultiRiordan multi(std::size_t ell, std::size_t order) {
    long g0 = 0;
    while (g0 == 0) g0 = integer(-2, 3);
    const long c = integer(1, 2);
    std::vector<RationalSeries> f;
    for (std::size_t i = 0; i < ell; ++i) f.push_back(series(order, ell, 1, c));
    return RationalMultiRiordan::proper(series(order, ell, 0, g0), std::move(f));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace mrd::testing

#endif  // MRD_TESTS_SUPPORT_HPP
