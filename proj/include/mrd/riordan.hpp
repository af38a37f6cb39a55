#ifndef MRD_RIORDAN_HPP
#define MRD_RIORDAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mrd/matrix.hpp"
#include "mrd/series.hpp"

namespace mrd {

/// proper: lower-triangular array, f(0) = 0 and [t]f != 0.
/// type:   square array, f(0) != 0.
enum class ArrayKind { proper, type };

inline const char* to_string(ArrayKind kind) { return kind == ArrayKind::proper ? "proper" : "type"; }

/// The pair (g, f) defining d_{n,k} = [t^n] g f^k.
template <typename Scalar>
class RiordanSpec {
 public:
  static RiordanSpec proper(Series<Scalar> g, Series<Scalar> f) {
    return RiordanSpec(std::move(g), std::move(f), ArrayKind::proper);
  }
  static RiordanSpec type(Series<Scalar> g, Series<Scalar> f) {
    return RiordanSpec(std::move(g), std::move(f), ArrayKind::type);
  }

  const Series<Scalar>& g() const noexcept { return g_; }
  const Series<Scalar>& f() const noexcept { return f_; }
  ArrayKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return std::min(g_.order(), f_.order()); }

 private:
  RiordanSpec(Series<Scalar> g, Series<Scalar> f, ArrayKind kind)
      : g_(std::move(g)), f_(std::move(f)), kind_(kind) {
    if (g_[0] == Scalar(0)) raise(ErrorKind::InvalidSpec, "g(0) must be nonzero");
    if (kind_ == ArrayKind::proper) {
      if (!(f_[0] == Scalar(0)) || f_.order() < 1 || f_[1] == Scalar(0))
        raise(ErrorKind::InvalidSpec, "a proper array needs f(0) = 0 and [t]f != 0");
    } else if (f_[0] == Scalar(0)) {
      raise(ErrorKind::InvalidSpec, "a type array needs f(0) != 0");
    }
  }

  Series<Scalar> g_;
  Series<Scalar> f_;
  ArrayKind kind_;
};

using RationalRiordan = RiordanSpec<Rational>;

namespace detail {

template <typename Scalar>
void require_kind(const RiordanSpec<Scalar>& a, ArrayKind kind, const char* op) {
  if (a.kind() != kind)
    raise(ErrorKind::KindMismatch,
          std::string(op) + " needs a " + to_string(kind) + " array, got a " + to_string(a.kind()) +
              " array");
}

/// Order needed to build an R x C block: R-1 for triangular arrays, R+C-2 for square ones.
inline std::size_t required_order(ArrayKind kind, std::size_t rows, std::size_t cols) {
  if (rows == 0) return 0;
  return kind == ArrayKind::proper ? rows - 1 : rows + cols - 2;
}

/// Column k = first · step_0 · step_1 · ... · step_{k-1} with steps cycling through `steps`.
template <typename Scalar>
Matrix<Scalar> build_columns(const Series<Scalar>& first, const std::vector<Series<Scalar>>& steps,
                             std::size_t rows, std::size_t cols) {
  Matrix<Scalar> m = zeros<Scalar>(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  if (rows == 0) return m;
  Series<Scalar> column = first.truncated(rows - 1);
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t n = 0; n < rows; ++n)
      m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) = column[n];
    if (k + 1 < cols) column = column * steps[k % steps.size()].truncated(rows - 1);
  }
  return m;
}

}  // namespace detail

/// The R x C block with entries [t^n] g f^k.
template <typename Scalar>
Matrix<Scalar> build(const RiordanSpec<Scalar>& spec, std::size_t rows, std::size_t cols) {
  const std::size_t need = detail::required_order(spec.kind(), rows, cols);
  if (spec.order() < need)
    raise(ErrorKind::InsufficientTruncation,
          "a " + std::to_string(rows) + "x" + std::to_string(cols) + " block needs order " +
              std::to_string(need) + ", spec is exact to " + std::to_string(spec.order()));
  return detail::build_columns(spec.g(), {spec.f()}, rows, cols);
}

/// Group law (g1, f1)(g2, f2) = (g1 · g2(f1), f2(f1)).
template <typename Scalar>
RiordanSpec<Scalar> mul(const RiordanSpec<Scalar>& a, const RiordanSpec<Scalar>& b) {
  detail::require_kind(a, ArrayKind::proper, "mul");
  detail::require_kind(b, ArrayKind::proper, "mul");
  return RiordanSpec<Scalar>::proper(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

/// (1 / g(fbar), fbar) with fbar the compositional inverse of f.
template <typename Scalar>
RiordanSpec<Scalar> inv(const RiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::proper, "inv");
  const Series<Scalar> fbar = comp_inverse(a.f());
  return RiordanSpec<Scalar>::proper(reciprocal(compose(a.g(), fbar)), fbar);
}

template <typename Scalar>
RiordanSpec<Scalar> identity_spec(std::size_t order) {
  return RiordanSpec<Scalar>::proper(Series<Scalar>::constant(Scalar(1), order),
                                     Series<Scalar>::variable(order));
}

/// The proper array (g, t f) whose entries satisfy d~_{n,k} = d_{n-k,k}.
template <typename Scalar>
RiordanSpec<Scalar> associate(const RiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::type, "associate");
  return RiordanSpec<Scalar>::proper(a.g(), shift_up(a.f(), 1));
}

namespace detail {

/// The valuation-one multiplier of the triangular array realizing `a`.
template <typename Scalar>
Series<Scalar> triangular_multiplier(const RiordanSpec<Scalar>& a) {
  return a.kind() == ArrayKind::proper ? a.f() : shift_up(a.f(), 1);
}

template <typename Scalar>
Series<Scalar> first_terms(const Series<Scalar>& s, std::size_t terms, const char* what) {
  if (terms == 0) raise(ErrorKind::IndexOutOfRange, "at least one term must be requested");
  if (s.order() + 1 < terms)
    raise(ErrorKind::InsufficientTruncation,
          std::string(what) + ": only " + std::to_string(s.order() + 1) +
              " terms are exact at this truncation");
  return s.truncated(terms - 1);
}

}  // namespace detail

/// A(t) = t / inverse(t f) for type arrays (t / inverse(f) for proper ones).
template <typename Scalar>
Series<Scalar> a_sequence(const RiordanSpec<Scalar>& a, std::size_t terms) {
  const Series<Scalar> w = comp_inverse(detail::triangular_multiplier(a));
  return detail::first_terms(reciprocal(shift_down(w, 1)), terms, "A-sequence");
}

/// Z(t) = (1 - d00 / g(w)) / w with w the inverse of t f (of f for proper arrays).
template <typename Scalar>
Series<Scalar> z_sequence(const RiordanSpec<Scalar>& a, std::size_t terms) {
  const Series<Scalar> w = comp_inverse(detail::triangular_multiplier(a));
  const Series<Scalar> gw = compose(a.g(), w);
  const Series<Scalar> inner = Scalar(1) - a.g()[0] * reciprocal(gw);
  return detail::first_terms(divide(inner, w), terms, "Z-sequence");
}

/// One failed entry of a recurrence check.
template <typename Scalar>
struct Violation {
  std::string relation;
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
};

template <typename Scalar>
struct RecurrenceReport {
  std::size_t depth = 0;
  std::size_t checked = 0;
  std::vector<Violation<Scalar>> violations;

  bool holds() const { return violations.empty(); }
};

namespace detail {

template <typename Scalar>
void record(RecurrenceReport<Scalar>& report, const char* relation, std::size_t row,
            std::size_t col, const Scalar& lhs, const Scalar& rhs) {
  ++report.checked;
  if (!(lhs == rhs)) report.violations.push_back({relation, row, col, lhs, rhs});
}

template <typename Scalar>
Scalar power_of(const Scalar& base, std::size_t e) {
  Scalar r(1);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Checks the A/Z recurrences of a type array entrywise on the depth x depth block:
///   a-recurrence   d_{n,k} = sum_{j=0}^{n} a_j d_{n-j,k+j-1}            (k >= 1)
///   z-recurrence   d_{n,0} = sum_{j=0}^{n-1} z_j d_{n-j-1,j}            (n >= 1)
///   a-unrolled     d_{n,k} = sum_{l<k} sum_{j=1}^{n} a_0^l a_j d_{n-j,k+j-l-1} + a_0^k d_{n,0}
///   z-unrolled     d_{n,0} = z_0^n d_{0,0} + sum_{l=1}^{n-1} sum_{j=1}^{n-l} z_0^{l-1} z_j d_{n-j-l,j}
template <typename Scalar>
RecurrenceReport<Scalar> check_recurrences(const RiordanSpec<Scalar>& a, std::size_t depth) {
  detail::require_kind(a, ArrayKind::type, "check_recurrences");
  RecurrenceReport<Scalar> report;
  report.depth = depth;
  if (depth == 0) return report;
  const std::size_t width = 2 * depth;
  const Matrix<Scalar> d = build(a, depth, width);
  const Series<Scalar> as = a_sequence(a, depth);
  const Series<Scalar> zs = z_sequence(a, depth);
  auto at = [&](long n, long k) -> Scalar {
    if (n < 0 || k < 0) return Scalar(0);
    return d(n, k);
  };
  const auto n_max = static_cast<long>(depth);
  for (long n = 0; n < n_max; ++n) {
    for (long k = 1; k < n_max; ++k) {
      Scalar rhs(0);
      for (long j = 0; j <= n; ++j) rhs += as[j] * at(n - j, k + j - 1);
      detail::record(report, "a-recurrence", n, k, at(n, k), rhs);
    }
    if (n >= 1) {
      Scalar rhs(0);
      for (long j = 0; j <= n - 1; ++j) rhs += zs[j] * at(n - j - 1, j);
      detail::record(report, "z-recurrence", n, 0, at(n, 0), rhs);
    }
    for (long k = 0; k < n_max; ++k) {
      Scalar rhs = detail::power_of(as[0], k) * at(n, 0);
      for (long l = 0; l < k; ++l)
        for (long j = 1; j <= n; ++j)
          rhs += detail::power_of(as[0], l) * as[j] * at(n - j, k + j - l - 1);
      detail::record(report, "a-unrolled", n, k, at(n, k), rhs);
    }
    if (n >= 1) {
      Scalar rhs = detail::power_of(zs[0], n) * at(0, 0);
      for (long l = 1; l <= n - 1; ++l)
        for (long j = 1; j <= n - l; ++j)
          rhs += detail::power_of(zs[0], l - 1) * zs[j] * at(n - j - l, j);
      detail::record(report, "z-unrolled", n, 0, at(n, 0), rhs);
    }
  }
  return report;
}

template <typename Scalar>
struct TransitWitness {
  bool comparable = false;
  std::optional<Matrix<Scalar>> transit;
};

template <typename Scalar>
struct PosetComparison {
  std::size_t depth = 0;
  bool entrywise = false;
  TransitWitness<Scalar> transit;
};

/// Compares two type arrays on a depth x depth block: entrywise order, and the transit
/// matrix T with A~ T = B~ between the associated triangular arrays. The arrays are
/// comparable when T has nonnegative integer entries on the block.
template <typename Scalar>
PosetComparison<Scalar> poset_compare(const RiordanSpec<Scalar>& a, const RiordanSpec<Scalar>& b,
                                      std::size_t depth) {
  detail::require_kind(a, ArrayKind::type, "poset_compare");
  detail::require_kind(b, ArrayKind::type, "poset_compare");
  PosetComparison<Scalar> out;
  out.depth = depth;
  const Matrix<Scalar> da = build(a, depth, depth);
  const Matrix<Scalar> db = build(b, depth, depth);
  out.entrywise = true;
  for (Eigen::Index r = 0; r < da.rows(); ++r)
    for (Eigen::Index c = 0; c < da.cols(); ++c)
      if (db(r, c) < da(r, c)) out.entrywise = false;

  const Matrix<Scalar> ta = build(associate(a), depth, depth);
  const Matrix<Scalar> tb = build(associate(b), depth, depth);
  Matrix<Scalar> transit = solve_lower(ta, tb);
  bool comparable = true;
  for (Eigen::Index r = 0; r < transit.rows(); ++r)
    for (Eigen::Index c = 0; c < transit.cols(); ++c)
      if (transit(r, c) < Scalar(0) || !is_integral(transit(r, c))) comparable = false;
  out.transit.comparable = comparable;
  if (comparable) out.transit.transit = std::move(transit);
  return out;
}

}  // namespace mrd

#endif  // MRD_RIORDAN_HPP
