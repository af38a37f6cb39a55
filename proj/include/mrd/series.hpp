#ifndef MRD_SERIES_HPP
#define MRD_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrd/error.hpp"
#include "mrd/rational.hpp"

namespace mrd {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// The truncation order N is part of the value: every coefficient up to N is exact and
/// nothing is known beyond it. Values are immutable; all arithmetic lives in free
/// functions and returns new series whose order documents how far the result is exact.
template <typename Scalar>
class Series {
 public:
  using Coefficients = std::vector<Scalar>;

  /// Zero series, exact to `order`.
  explicit Series(std::size_t order = 0) : coeffs_(order + 1, Scalar(0)) {}

  /// Coefficients c_0..c_N; the order is `coeffs.size() - 1`.
  explicit Series(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  }

  static Series constant(const Scalar& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series t.
  static Series variable(std::size_t order) { return monomial(Scalar(1), 1, order); }

  /// c·t^power truncated at `order`.
  static Series monomial(const Scalar& c, std::size_t power, std::size_t order) {
    Series s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const Scalar& operator[](std::size_t n) const {
    assert(n < coeffs_.size());
    return coeffs_[n];
  }

  /// [t^n] of the series; throws IndexBeyondTruncation past the order.
  const Scalar& coeff(std::size_t n) const {
    if (n > order())
      raise(ErrorKind::IndexBeyondTruncation,
            "coefficient " + std::to_string(n) + " requested from a series truncated at order " +
                std::to_string(order()));
    return coeffs_[n];
  }

  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt for the all-zero series.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == Scalar(0))) return i;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  Series truncated(std::size_t order) const {
    assert(order <= this->order());
    return Series(Coefficients(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
  }

 private:
  Coefficients coeffs_;
};

using RationalSeries = Series<Rational>;

namespace detail {

template <typename Scalar>
Series<Scalar> from_fn(std::size_t order, auto&& fn) {
  typename Series<Scalar>::Coefficients c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(fn(n));
  return Series<Scalar>(std::move(c));
}

}  // namespace detail

/// Equality up to the smaller of the two truncation orders.
template <typename Scalar>
bool operator==(const Series<Scalar>& a, const Series<Scalar>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) {
  return detail::from_fn<Scalar>(std::min(a.order(), b.order()),
                                 [&](std::size_t n) { return Scalar(a[n] + b[n]); });
}

template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) {
  return detail::from_fn<Scalar>(std::min(a.order(), b.order()),
                                 [&](std::size_t n) { return Scalar(a[n] - b[n]); });
}

template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a) {
  return detail::from_fn<Scalar>(a.order(), [&](std::size_t n) { return Scalar(-a[n]); });
}

template <typename Scalar>
Series<Scalar> operator*(const Scalar& c, const Series<Scalar>& a) {
  return detail::from_fn<Scalar>(a.order(), [&](std::size_t n) { return Scalar(c * a[n]); });
}

template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Scalar& c) {
  return c * a;
}

template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  typename Series<Scalar>::Coefficients c(order + 1, Scalar(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == Scalar(0)) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return Series<Scalar>(std::move(c));
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Scalar& c) {
  return a + Series<Scalar>::constant(c, a.order());
}

template <typename Scalar>
Series<Scalar> operator-(const Scalar& c, const Series<Scalar>& a) {
  return Series<Scalar>::constant(c, a.order()) - a;
}

/// t^k · f. Exact: the order grows by k.
template <typename Scalar>
Series<Scalar> shift_up(const Series<Scalar>& f, std::size_t k) {
  typename Series<Scalar>::Coefficients c(k, Scalar(0));
  c.insert(c.end(), f.coefficients().begin(), f.coefficients().end());
  return Series<Scalar>(std::move(c));
}

/// f / t^k; requires the first k coefficients to vanish. The order drops by k.
template <typename Scalar>
Series<Scalar> shift_down(const Series<Scalar>& f, std::size_t k) {
  if (k > f.order())
    raise(ErrorKind::InsufficientTruncation,
          "cannot divide a series of order " + std::to_string(f.order()) + " by t^" +
              std::to_string(k));
  for (std::size_t i = 0; i < k; ++i)
    if (!(f[i] == Scalar(0)))
      raise(ErrorKind::DivisionByHigherValuation,
            "series has a nonzero coefficient below t^" + std::to_string(k));
  return Series<Scalar>(typename Series<Scalar>::Coefficients(
      f.coefficients().begin() + static_cast<long>(k), f.coefficients().end()));
}

/// Quotient a / b. Requires valuation(b) <= valuation(a); the result is exact to
/// min(order(a), order(b)) - valuation(b). A zero numerator yields the zero series.
template <typename Scalar>
Series<Scalar> divide(const Series<Scalar>& a, const Series<Scalar>& b) {
  const auto vb = b.valuation();
  if (!vb) raise(ErrorKind::DivisionByHigherValuation, "division by the zero series");
  const std::size_t order = std::min(a.order(), b.order());
  if (*vb > order)
    raise(ErrorKind::InsufficientTruncation,
          "divisor valuation " + std::to_string(*vb) + " exceeds the common order " +
              std::to_string(order));
  if (const auto va = a.truncated(order).valuation(); va && *va < *vb)
    raise(ErrorKind::DivisionByHigherValuation,
          "valuation of the divisor (" + std::to_string(*vb) + ") exceeds that of the dividend (" +
              std::to_string(*va) + ")");
  const Series<Scalar> num = shift_down(a.truncated(order), *vb);
  const Series<Scalar> den = shift_down(b.truncated(order), *vb);
  const std::size_t n_out = num.order();
  typename Series<Scalar>::Coefficients q(n_out + 1, Scalar(0));
  for (std::size_t n = 0; n <= n_out; ++n) {
    Scalar acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= den[k] * q[n - k];
    q[n] = acc / den[0];
  }
  return Series<Scalar>(std::move(q));
}

template <typename Scalar>
Series<Scalar> operator/(const Series<Scalar>& a, const Series<Scalar>& b) {
  return divide(a, b);
}

template <typename Scalar>
Series<Scalar> operator/(const Series<Scalar>& a, const Scalar& c) {
  return (Scalar(1) / c) * a;
}

/// 1 / f.
template <typename Scalar>
Series<Scalar> reciprocal(const Series<Scalar>& f) {
  return divide(Series<Scalar>::constant(Scalar(1), f.order()), f);
}

/// f^k for any integer k; negative powers go through `reciprocal`.
template <typename Scalar>
Series<Scalar> pow(const Series<Scalar>& f, long k) {
  if (k < 0) return reciprocal(pow(f, -k));
  Series<Scalar> result = Series<Scalar>::constant(Scalar(1), f.order());
  Series<Scalar> base = f;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

template <typename Scalar>
Series<Scalar> derivative(const Series<Scalar>& f) {
  if (f.order() == 0) return Series<Scalar>(0);
  return detail::from_fn<Scalar>(f.order() - 1,
                                 [&](std::size_t n) { return Scalar(f[n + 1] * Scalar(n + 1)); });
}

/// f(g(t)). Requires g(0) = 0; exact to min(order(f), order(g)).
template <typename Scalar>
Series<Scalar> compose(const Series<Scalar>& f, const Series<Scalar>& g) {
  if (!(g[0] == Scalar(0)))
    raise(ErrorKind::CompositionWithUnitConstantTerm,
          "inner series of a composition must have zero constant term");
  const std::size_t order = std::min(f.order(), g.order());
  const Series<Scalar> inner = g.truncated(order);
  Series<Scalar> result = Series<Scalar>::constant(f[order], order);
  for (std::size_t k = order; k-- > 0;) result = result * inner + f[k];
  return result;
}

namespace detail {

template <typename Scalar>
void require_invertible(const Series<Scalar>& f) {
  const auto v = f.valuation();
  if (!v || *v != 1)
    raise(ErrorKind::NotCompositionallyInvertible,
          v ? "series has valuation " + std::to_string(*v) + ", expected 1"
            : std::string("the zero series has no compositional inverse"));
}

}  // namespace detail

/// Compositional inverse by a triangular coefficient solve.
///
/// Writes g = b_1 t + b_2 t^2 + ... and solves [t^n] f(g) = 0 for n >= 2 one coefficient
/// at a time; pw[k][n] tracks [t^n] g^k, which for k >= 2 only involves b_1..b_{n-1}.
template <typename Scalar>
Series<Scalar> comp_inverse(const Series<Scalar>& f) {
  detail::require_invertible(f);
  const std::size_t order = f.order();
  std::vector<std::vector<Scalar>> pw(order + 1, std::vector<Scalar>(order + 1, Scalar(0)));
  std::vector<Scalar> b(order + 1, Scalar(0));
  b[1] = Scalar(1) / f[1];
  pw[1][1] = b[1];
  for (std::size_t n = 2; n <= order; ++n) {
    Scalar acc(0);
    for (std::size_t k = 2; k <= n; ++k) {
      Scalar c(0);
      for (std::size_t j = 1; j + k - 1 <= n; ++j) c += b[j] * pw[k - 1][n - j];
      pw[k][n] = c;
      acc += f[k] * c;
    }
    b[n] = -acc / f[1];
    pw[1][n] = b[n];
  }
  return Series<Scalar>(std::move(b));
}

/// Compositional inverse by Newton iteration g <- g - (f(g) - t) / f'(g), doubling the
/// number of correct coefficients per step. Must agree exactly with `comp_inverse`.
template <typename Scalar>
Series<Scalar> comp_inverse_newton(const Series<Scalar>& f) {
  detail::require_invertible(f);
  const std::size_t order = f.order();
  const Series<Scalar> df = derivative(f);
  typename Series<Scalar>::Coefficients start(order + 1, Scalar(0));
  start[1] = Scalar(1) / f[1];
  Series<Scalar> g(std::move(start));
  for (std::size_t exact = 1; exact < order;) {
    const std::size_t target = std::min(2 * exact, order);
    const Series<Scalar> gm = g.truncated(target);
    const Series<Scalar> residual = compose(f.truncated(target), gm) - Series<Scalar>::variable(target);
    const Series<Scalar> scaled = shift_down(residual, exact + 1);
    const std::size_t m = scaled.order();
    const Series<Scalar> slope = compose(df.truncated(m), gm.truncated(m));
    const Series<Scalar> step = shift_up(divide(scaled, slope), exact + 1);
    typename Series<Scalar>::Coefficients next(order + 1, Scalar(0));
    const Series<Scalar> refined = gm - step;
    for (std::size_t n = 0; n <= target; ++n) next[n] = refined[n];
    g = Series<Scalar>(std::move(next));
    exact = target;
  }
  return g.truncated(order);
}

/// u^alpha for u(0) = 1, via the recurrence n·y_n = sum_k ((alpha+1)k - n) u_k y_{n-k}.
template <typename Scalar>
Series<Scalar> unit_power(const Series<Scalar>& u, const Scalar& alpha) {
  assert(u[0] == Scalar(1));
  typename Series<Scalar>::Coefficients y(u.order() + 1, Scalar(0));
  y[0] = Scalar(1);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    Scalar acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      acc += ((alpha + Scalar(1)) * Scalar(k) - Scalar(n)) * u[k] * y[n - k];
    y[n] = acc / Scalar(n);
  }
  return Series<Scalar>(std::move(y));
}

/// The ell-th root with positive leading coefficient. Requires ell | valuation(f) and a
/// leading coefficient that is the ell-th power of a positive scalar. For f of order N and
/// valuation v the result is exact to N - v + v/ell.
template <typename Scalar>
Series<Scalar> ell_root(const Series<Scalar>& f, unsigned ell) {
  if (ell == 0) raise(ErrorKind::InvalidSpec, "root degree must be positive");
  if (ell == 1) return f;
  const auto v = f.valuation();
  if (!v) return Series<Scalar>((f.order() + 1 + ell - 1) / ell - 1);
  if (*v % ell != 0)
    raise(ErrorKind::ValuationNotDivisible,
          "valuation " + std::to_string(*v) + " is not divisible by " + std::to_string(ell));
  const Series<Scalar> u = shift_down(f, *v);
  const auto lead = scalar_root(u[0], ell);
  if (!lead)
    raise(ErrorKind::LeadingCoefficientNotPerfectPower,
          "leading coefficient is not the " + std::to_string(ell) +
              "-th power of a positive rational");
  const Series<Scalar> root = *lead * unit_power(u / u[0], Scalar(1) / Scalar(ell));
  return shift_up(root, *v / ell);
}

/// sum_k f_{k·ell + offset} t^k, i.e. the substitution t^ell -> t on one residue class.
template <typename Scalar>
Series<Scalar> stride_compact(const Series<Scalar>& f, std::size_t ell, std::size_t offset = 0) {
  if (offset > f.order())
    raise(ErrorKind::InsufficientTruncation, "series too short for stride compaction");
  return detail::from_fn<Scalar>((f.order() - offset) / ell,
                                 [&](std::size_t k) { return f[k * ell + offset]; });
}

/// f(t^ell); exact up to (N+1)·ell - 1.
template <typename Scalar>
Series<Scalar> stride_expand(const Series<Scalar>& f, std::size_t ell) {
  typename Series<Scalar>::Coefficients c((f.order() + 1) * ell, Scalar(0));
  for (std::size_t k = 0; k <= f.order(); ++k) c[k * ell] = f[k];
  return Series<Scalar>(std::move(c));
}

/// True when every nonzero coefficient index is congruent to `residue` mod `ell`.
template <typename Scalar>
bool has_grading(const Series<Scalar>& f, std::size_t ell, std::size_t residue) {
  for (std::size_t n = 0; n <= f.order(); ++n)
    if (n % ell != residue % ell && !(f[n] == Scalar(0))) return false;
  return true;
}

/// A series supported on a single residue class modulo ell.
template <typename Scalar>
class GradedSeries {
 public:
  GradedSeries(Series<Scalar> base, std::size_t ell, std::size_t residue)
      : base_(std::move(base)), ell_(ell), residue_(residue) {
    if (ell_ == 0 || residue_ >= ell_)
      raise(ErrorKind::ResidueOutOfRange, "residue must lie in 0..ell-1");
    if (!has_grading(base_, ell_, residue_))
      raise(ErrorKind::GradingViolation,
            "series is not supported on exponents congruent to " + std::to_string(residue_) +
                " mod " + std::to_string(ell_));
  }

  const Series<Scalar>& base() const noexcept { return base_; }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t residue() const noexcept { return residue_; }

 private:
  Series<Scalar> base_;
  std::size_t ell_;
  std::size_t residue_;
};

template <typename Scalar>
GradedSeries<Scalar> operator*(const GradedSeries<Scalar>& a, const GradedSeries<Scalar>& b) {
  if (a.ell() != b.ell()) raise(ErrorKind::EllMismatch, "graded series with different moduli");
  return GradedSeries<Scalar>(a.base() * b.base(), a.ell(), (a.residue() + b.residue()) % a.ell());
}

}  // namespace mrd

#endif  // MRD_SERIES_HPP
