#ifndef MRD_MULTIRIORDAN_HPP
#define MRD_MULTIRIORDAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mrd/matrix.hpp"
#include "mrd/riordan.hpp"
#include "mrd/series.hpp"

namespace mrd {

/// (g; f_1, ..., f_ell) with ell >= 2. Column k of the array has generating function
/// g · f_1^{e_1(k)} ··· f_ell^{e_ell(k)} with e_i(k) = floor((k + ell - i) / ell), i.e. the
/// columns are g, g f_1, g f_1 f_2, ..., cycling through the multipliers.
///
/// proper: g in K[[t^ell]], each f_i in t K[[t^ell]] with [t]f_i != 0.
/// type:   g and each f_i in K[[t^ell]] with nonzero constant terms.
template <typename Scalar>
class MultiRiordanSpec {
 public:
  static MultiRiordanSpec proper(Series<Scalar> g, std::vector<Series<Scalar>> f) {
    return MultiRiordanSpec(std::move(g), std::move(f), ArrayKind::proper);
  }
  static MultiRiordanSpec type(Series<Scalar> g, std::vector<Series<Scalar>> f) {
    return MultiRiordanSpec(std::move(g), std::move(f), ArrayKind::type);
  }

  std::size_t ell() const noexcept { return f_.size(); }
  const Series<Scalar>& g() const noexcept { return g_; }
  /// Multiplier f_{i+1} (zero-based).
  const Series<Scalar>& f(std::size_t i) const { return f_.at(i); }
  const std::vector<Series<Scalar>>& multipliers() const noexcept { return f_; }
  ArrayKind kind() const noexcept { return kind_; }

  std::size_t order() const noexcept {
    std::size_t n = g_.order();
    for (const auto& fi : f_) n = std::min(n, fi.order());
    return n;
  }

  GradedSeries<Scalar> graded_g() const { return GradedSeries<Scalar>(g_, ell(), 0); }
  GradedSeries<Scalar> graded_f(std::size_t i) const {
    return GradedSeries<Scalar>(f(i), ell(), kind_ == ArrayKind::proper ? 1 % ell() : 0);
  }

 private:
  MultiRiordanSpec(Series<Scalar> g, std::vector<Series<Scalar>> f, ArrayKind kind)
      : g_(std::move(g)), f_(std::move(f)), kind_(kind) {
    if (f_.size() < 2)
      raise(ErrorKind::InvalidSpec,
            "a multiple array needs at least two multipliers; use RiordanSpec for one");
    const std::size_t l = f_.size();
    if (g_[0] == Scalar(0)) raise(ErrorKind::InvalidSpec, "g(0) must be nonzero");
    if (!has_grading(g_, l, 0))
      raise(ErrorKind::GradingViolation, "g must be a series in t^" + std::to_string(l));
    const std::size_t residue = kind_ == ArrayKind::proper ? 1 : 0;
    for (std::size_t i = 0; i < l; ++i) {
      const auto name = "f_" + std::to_string(i + 1);
      if (!has_grading(f_[i], l, residue))
        raise(ErrorKind::GradingViolation,
              name + " must be supported on exponents congruent to " + std::to_string(residue) +
                  " mod " + std::to_string(l));
      if (f_[i].order() < residue || f_[i][residue] == Scalar(0))
        raise(ErrorKind::InvalidSpec,
              name + (kind_ == ArrayKind::proper ? " needs [t]f != 0" : " needs f(0) != 0"));
    }
  }

  Series<Scalar> g_;
  std::vector<Series<Scalar>> f_;
  ArrayKind kind_;
};

using RationalMultiRiordan = MultiRiordanSpec<Rational>;

template <typename Scalar>
MultiRiordanSpec<Scalar> multi_identity(std::size_t ell, std::size_t order) {
  return MultiRiordanSpec<Scalar>::proper(
      Series<Scalar>::constant(Scalar(1), order),
      std::vector<Series<Scalar>>(ell, Series<Scalar>::variable(order)));
}

namespace detail {

template <typename Scalar>
void require_kind(const MultiRiordanSpec<Scalar>& a, ArrayKind kind, const char* op) {
  if (a.kind() != kind)
    raise(ErrorKind::KindMismatch,
          std::string(op) + " needs a " + to_string(kind) + " multiple array, got a " +
              to_string(a.kind()) + " one");
}

}  // namespace detail

template <typename Scalar>
Matrix<Scalar> mbuild(const MultiRiordanSpec<Scalar>& spec, std::size_t rows, std::size_t cols) {
  const std::size_t need = detail::required_order(spec.kind(), rows, cols);
  if (spec.order() < need)
    raise(ErrorKind::InsufficientTruncation,
          "a " + std::to_string(rows) + "x" + std::to_string(cols) + " block needs order " +
              std::to_string(need) + ", spec is exact to " + std::to_string(spec.order()));
  return detail::build_columns(spec.g(), spec.multipliers(), rows, cols);
}

/// h = (f_1 ··· f_ell)^{1/ell}. For proper specs the factor t is split off each
/// multiplier first, so h keeps the full truncation order.
template <typename Scalar>
Series<Scalar> pivot_root(const MultiRiordanSpec<Scalar>& a) {
  const bool proper = a.kind() == ArrayKind::proper;
  Series<Scalar> product = proper ? shift_down(a.f(0), 1) : a.f(0);
  for (std::size_t i = 1; i < a.ell(); ++i) product = product * (proper ? shift_down(a.f(i), 1) : a.f(i));
  Series<Scalar> root = ell_root(product, static_cast<unsigned>(a.ell()));
  return proper ? shift_up(root, 1) : root;
}

/// (g; f_i) (d; h_i) = (g · d(h); (f_i / h) · h_i(h)).
template <typename Scalar>
MultiRiordanSpec<Scalar> mmul(const MultiRiordanSpec<Scalar>& a, const MultiRiordanSpec<Scalar>& b) {
  if (a.ell() != b.ell())
    raise(ErrorKind::EllMismatch, "cannot multiply arrays with ell = " + std::to_string(a.ell()) +
                                      " and ell = " + std::to_string(b.ell()));
  detail::require_kind(a, ArrayKind::proper, "mmul");
  detail::require_kind(b, ArrayKind::proper, "mmul");
  const Series<Scalar> h = pivot_root(a);
  const Series<Scalar> h_over_t = shift_down(h, 1);
  std::vector<Series<Scalar>> f;
  f.reserve(a.ell());
  for (std::size_t i = 0; i < a.ell(); ++i)
    f.push_back(divide(shift_down(a.f(i), 1), h_over_t) * compose(b.f(i), h));
  return MultiRiordanSpec<Scalar>::proper(a.g() * compose(b.g(), h), std::move(f));
}

/// (g; f_i)^{-1} = (1 / g(hbar); t hbar / f_i(hbar)), hbar the compositional inverse of h.
template <typename Scalar>
MultiRiordanSpec<Scalar> minv(const MultiRiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::proper, "minv");
  const Series<Scalar> hbar = comp_inverse(pivot_root(a));
  std::vector<Series<Scalar>> f;
  f.reserve(a.ell());
  for (std::size_t i = 0; i < a.ell(); ++i)
    f.push_back(shift_up(reciprocal(compose(shift_down(a.f(i), 1), hbar)), 1));
  return MultiRiordanSpec<Scalar>::proper(reciprocal(compose(a.g(), hbar)), std::move(f));
}

/// The proper array (g; t f_1, ..., t f_ell) associated with a type array; its entries
/// satisfy d~_{n,k} = d_{n-k,k}.
template <typename Scalar>
MultiRiordanSpec<Scalar> massociate(const MultiRiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::type, "massociate");
  std::vector<Series<Scalar>> f;
  for (const auto& fi : a.multipliers()) f.push_back(shift_up(fi, 1));
  return MultiRiordanSpec<Scalar>::proper(a.g(), std::move(f));
}

/// Image of a column vector whose generating function lives in residue class j:
/// A_j -> g · (f_1 ··· f_j / h^j) · A_j(h).
template <typename Scalar>
Series<Scalar> ft_apply(const MultiRiordanSpec<Scalar>& a, const GradedSeries<Scalar>& column) {
  detail::require_kind(a, ArrayKind::proper, "ft_apply");
  if (column.ell() != a.ell())
    raise(ErrorKind::EllMismatch, "column vector graded modulo " + std::to_string(column.ell()) +
                                      ", array has ell = " + std::to_string(a.ell()));
  const std::size_t j = column.residue();
  if (j >= a.ell()) raise(ErrorKind::ResidueOutOfRange, "residue must lie in 0..ell-1");
  const Series<Scalar> h = pivot_root(a);
  const Series<Scalar> h_over_t = shift_down(h, 1);
  Series<Scalar> factor = a.g();
  for (std::size_t i = 0; i < j; ++i) factor = factor * divide(shift_down(a.f(i), 1), h_over_t);
  return factor * compose(column.base(), h);
}

template <typename Scalar>
struct SumReport {
  /// g (1 + f_1 + f_1 f_2 + ... + f_1···f_{ell-1}) / (1 - f_1···f_ell).
  Series<Scalar> row_sums;
  bool row_sums_ok = false;
  /// Coefficients of the bivariate generating function match the array entrywise.
  bool bivariate_ok = false;
  /// sum_k d_{n-k,k}, read off the array.
  Series<Scalar> diag_sums;
  /// Agreement with g (1 + t f_1) / (1 - t^2 f_1 f_2); only evaluated for ell = 2.
  std::optional<bool> diag_gf_ok;
};

/// Row-sum, bivariate and diagonal-sum generating functions, each checked against the
/// rows x rows block of the array.
template <typename Scalar>
SumReport<Scalar> sum_gfs(const MultiRiordanSpec<Scalar>& a, std::size_t rows) {
  detail::require_kind(a, ArrayKind::proper, "sum_gfs");
  if (rows == 0) raise(ErrorKind::IndexOutOfRange, "at least one row is required");
  const std::size_t l = a.ell();
  const Matrix<Scalar> d = mbuild(a, rows, rows);
  const std::size_t order = rows - 1;

  // numerator terms g f_1···f_m, m < ell, and the full product P = f_1···f_ell
  std::vector<Series<Scalar>> head;
  Series<Scalar> acc = a.g().truncated(order);
  for (std::size_t m = 0; m < l; ++m) {
    head.push_back(acc);
    acc = acc * a.f(m).truncated(order);
  }
  Series<Scalar> product = a.f(0).truncated(order);
  for (std::size_t i = 1; i < l; ++i) product = product * a.f(i).truncated(order);

  SumReport<Scalar> out;
  Series<Scalar> numerator(order);
  for (const auto& s : head) numerator = numerator + s;
  out.row_sums = divide(numerator, Scalar(1) - product);
  out.row_sums_ok = true;
  for (std::size_t n = 0; n < rows; ++n) {
    Scalar s(0);
    for (std::size_t k = 0; k < rows; ++k) s += d(n, k);
    if (!(s == out.row_sums[n])) out.row_sums_ok = false;
  }

  // [y^k] of numerator(y) / (1 - y^ell P) is head[k mod ell] · P^{k div ell}
  out.bivariate_ok = true;
  std::vector<Series<Scalar>> powers{Series<Scalar>::constant(Scalar(1), order)};
  for (std::size_t k = 0; k < rows; ++k) {
    const std::size_t q = k / l;
    while (powers.size() <= q) powers.push_back(powers.back() * product);
    const Series<Scalar> coeff_y = head[k % l] * powers[q];
    for (std::size_t n = 0; n < rows; ++n)
      if (!(coeff_y[n] == d(n, k))) out.bivariate_ok = false;
  }

  typename Series<Scalar>::Coefficients diag(rows, Scalar(0));
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t k = 0; k <= n; ++k) diag[n] += d(n - k, k);
  out.diag_sums = Series<Scalar>(std::move(diag));
  if (l == 2) {
    const Series<Scalar> t = Series<Scalar>::variable(order);
    const Series<Scalar> gf =
        divide(a.g().truncated(order) * (Scalar(1) - (-(t * a.f(0).truncated(order)))),
               Scalar(1) - t * t * product);
    out.diag_gf_ok = gf == out.diag_sums;
  }
  return out;
}

template <typename Scalar>
struct SubgroupMembership {
  bool appell = false;
  bool lagrange = false;
  bool derivative = false;
  /// bell[j] is membership in the (j+1)-th Bell subgroup, f_{j+1} = t g.
  std::vector<bool> bell;
};

template <typename Scalar>
SubgroupMembership<Scalar> subgroup_membership(const MultiRiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::proper, "subgroup_membership");
  SubgroupMembership<Scalar> out;
  const std::size_t order = a.order();
  const Series<Scalar> t = Series<Scalar>::variable(order);
  out.appell = true;
  for (const auto& fi : a.multipliers()) out.appell = out.appell && fi == t;
  out.lagrange = a.g() == Series<Scalar>::constant(Scalar(1), order);
  try {
    out.derivative = a.g() == derivative(pivot_root(a));
  } catch (const MathError&) {
    out.derivative = false;
  }
  const Series<Scalar> tg = shift_up(a.g(), 1);
  for (const auto& fi : a.multipliers()) out.bell.push_back(fi == tg);
  return out;
}

/// The A-sequence and Z_0..Z_{ell-1} sequences, as series in t^ell.
template <typename Scalar>
struct SeqChar {
  std::size_t ell = 0;
  Series<Scalar> a;
  std::vector<Series<Scalar>> z;
};

/// Sequence characterization of a multiple array:
///   A(t)   = t^ell / hbar^ell
///   Z_0(t) = (1 - g_0 / g(hbar)) / hbar^ell
///   Z_m(t) = (1 - g_0 f_{1,1}···f_{m,1} hbar^m / (g(hbar) f_1(hbar)···f_m(hbar))) / hbar^ell
/// Type arrays are characterized through their associated proper array (hbar the inverse of
/// t h there).
template <typename Scalar>
SeqChar<Scalar> mseq(const MultiRiordanSpec<Scalar>& spec) {
  if (spec.kind() == ArrayKind::type) return mseq(massociate(spec));
  const std::size_t l = spec.ell();
  const Series<Scalar> hbar = comp_inverse(pivot_root(spec));
  const Series<Scalar> t_over_hbar = reciprocal(shift_down(hbar, 1));

  SeqChar<Scalar> out;
  out.ell = l;
  out.a = pow(t_over_hbar, static_cast<long>(l));

  // Each numerator 1 - c / (...) vanishes to order ell, so dividing by hbar^ell is a shift
  // followed by multiplication with (t / hbar)^ell = A.
  Series<Scalar> denom = compose(spec.g(), hbar);
  Scalar lead = spec.g()[0];
  for (std::size_t m = 0; m < l; ++m) {
    if (m > 0) {
      denom = denom * compose(shift_down(spec.f(m - 1), 1), hbar);
      lead *= spec.f(m - 1)[1];
    }
    const Series<Scalar> numerator = Scalar(1) - lead * reciprocal(denom);
    out.z.push_back(shift_down(numerator, l) * out.a);
  }
  return out;
}

/// Strided coefficient j of a series in t^ell: [t^{j ell}] s.
template <typename Scalar>
Scalar strided(const Series<Scalar>& s, std::size_t ell, std::size_t j) {
  return s.coeff(j * ell);
}

/// Production matrix assembled from the sequence characterization: column m < ell carries
/// Z_m at rows m, m + ell, m + 2 ell, ...; column k >= ell carries the A-sequence at rows
/// k - ell, k, k + ell, .... It satisfies D · P = (D without its first ell rows).
template <typename Scalar>
Matrix<Scalar> production_matrix(const SeqChar<Scalar>& seq, std::size_t size) {
  const std::size_t l = seq.ell;
  Matrix<Scalar> p = zeros<Scalar>(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  auto need = [&](const Series<Scalar>& s, const char* what) {
    if (size > 0 && s.order() + 1 < size)
      raise(ErrorKind::InsufficientTruncation,
            std::string(what) + " is exact to order " + std::to_string(s.order()) +
                ", production matrix of size " + std::to_string(size) + " needs " +
                std::to_string(size - 1));
  };
  need(seq.a, "A-sequence");
  for (std::size_t c = 0; c < size; ++c) {
    if (c < l) {
      need(seq.z[c], "Z-sequence");
      for (std::size_t j = 0; c + j * l < size; ++j)
        p(static_cast<Eigen::Index>(c + j * l), static_cast<Eigen::Index>(c)) = strided(seq.z[c], l, j);
    } else {
      for (std::size_t j = 0; c - l + j * l < size; ++j)
        p(static_cast<Eigen::Index>(c - l + j * l), static_cast<Eigen::Index>(c)) = strided(seq.a, l, j);
    }
  }
  return p;
}

template <typename Scalar>
Matrix<Scalar> production_matrix(const MultiRiordanSpec<Scalar>& spec, std::size_t size) {
  detail::require_kind(spec, ArrayKind::proper, "production_matrix");
  return production_matrix(mseq(spec), size);
}

/// Independent route to the production matrix: the triangular solve D^{-1} · (rows
/// ell..ell+size-1 of D) on the leading block.
template <typename Scalar>
Matrix<Scalar> production_matrix_by_solve(const MultiRiordanSpec<Scalar>& spec, std::size_t size) {
  detail::require_kind(spec, ArrayKind::proper, "production_matrix_by_solve");
  const auto n = static_cast<Eigen::Index>(size);
  const auto l = static_cast<Eigen::Index>(spec.ell());
  const Matrix<Scalar> d = mbuild(spec, size + spec.ell(), size);
  return solve_lower(Matrix<Scalar>(d.topRows(n)), up_shift(d, l, n));
}

/// One of the ell Riordan arrays of the column decomposition: column q of (g, f) becomes
/// column q·ell + offset of the multiple array, moved down by `offset` rows.
template <typename Scalar>
struct DecomposedPart {
  Series<Scalar> g;
  Series<Scalar> f;
  std::size_t offset = 0;

  Matrix<Scalar> build(std::size_t rows, std::size_t cols) const {
    return detail::build_columns(g, {f}, rows, cols);
  }
};

/// D = D_0 + ... + D_{ell-1}; after removing zero columns and top zero rows, part m is
/// (g f_1···f_m / t^m, f_1···f_ell).
template <typename Scalar>
std::vector<DecomposedPart<Scalar>> decompose(const MultiRiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::proper, "decompose");
  Series<Scalar> product = a.f(0);
  for (std::size_t i = 1; i < a.ell(); ++i) product = product * a.f(i);
  std::vector<DecomposedPart<Scalar>> parts;
  Series<Scalar> head = a.g();
  for (std::size_t m = 0; m < a.ell(); ++m) {
    if (m > 0) head = head * shift_down(a.f(m - 1), 1);
    parts.push_back({head, product, m});
  }
  return parts;
}

/// Interleaves decomposed parts back into the rows x cols block of the multiple array.
template <typename Scalar>
Matrix<Scalar> reconstruct(const std::vector<DecomposedPart<Scalar>>& parts, std::size_t rows,
                           std::size_t cols) {
  const std::size_t l = parts.size();
  Matrix<Scalar> m = zeros<Scalar>(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (const auto& part : parts) {
    const std::size_t part_cols = cols > part.offset ? (cols - part.offset + l - 1) / l : 0;
    if (part_cols == 0 || rows <= part.offset) continue;
    const Matrix<Scalar> block = part.build(rows - part.offset, part_cols);
    for (std::size_t q = 0; q < part_cols; ++q)
      for (std::size_t n = 0; n + part.offset < rows; ++n)
        m(static_cast<Eigen::Index>(n + part.offset), static_cast<Eigen::Index>(q * l + part.offset)) =
            block(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(q));
  }
  return m;
}

/// Checks the recurrences of a multiple type array entrywise on the depth x depth block:
///   a-recurrence   d_{n,k} = sum_j a_j d_{n-j ell, k+(j-1) ell}        (k >= ell)
///   z<m>-recurrence d_{n,m} = sum_j z_{m,j} d_{n-(j+1) ell, m+j ell}   (n >= 1, m < ell)
template <typename Scalar>
RecurrenceReport<Scalar> mtype_recurrence_check(const MultiRiordanSpec<Scalar>& a, std::size_t depth) {
  detail::require_kind(a, ArrayKind::type, "mtype_recurrence_check");
  RecurrenceReport<Scalar> report;
  report.depth = depth;
  if (depth == 0) return report;
  const std::size_t l = a.ell();
  const Matrix<Scalar> d = mbuild(a, depth, 2 * depth);
  const SeqChar<Scalar> seq = mseq(a);
  auto at = [&](long n, long k) -> Scalar {
    if (n < 0 || k < 0) return Scalar(0);
    return d(n, k);
  };
  auto coeff = [&](const Series<Scalar>& s, long j) {
    return static_cast<std::size_t>(j) * l <= s.order() ? s[static_cast<std::size_t>(j) * l] : Scalar(0);
  };
  const auto n_max = static_cast<long>(depth);
  const auto L = static_cast<long>(l);
  for (long n = 0; n < n_max; ++n) {
    for (long k = L; k < n_max; ++k) {
      Scalar rhs(0);
      for (long j = 0; n - j * L >= 0; ++j) rhs += coeff(seq.a, j) * at(n - j * L, k + (j - 1) * L);
      detail::record(report, "a-recurrence", n, k, at(n, k), rhs);
    }
    if (n == 0) continue;
    for (long m = 0; m < L && m < n_max; ++m) {
      Scalar rhs(0);
      for (long j = 0; n - (j + 1) * L >= 0; ++j)
        rhs += coeff(seq.z[m], j) * at(n - (j + 1) * L, m + j * L);
      const std::string relation = "z" + std::to_string(m) + "-recurrence";
      detail::record(report, relation.c_str(), n, m, at(n, m), rhs);
    }
  }
  return report;
}

}  // namespace mrd

#endif  // MRD_MULTIRIORDAN_HPP
