#ifndef MRD_COMPRESS_HPP
#define MRD_COMPRESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mrd/error.hpp"
#include "mrd/matrix.hpp"
#include "mrd/multiriordan.hpp"
#include "mrd/series.hpp"

namespace mrd {

/// The hat-functions of a compressed multiple Riordan array. The compressed array is the
/// ungraded cyclic array with columns ghat, ghat fhat_1, ghat fhat_1 fhat_2, ...
template <typename Scalar>
struct CompressedSpec {
  std::size_t ell = 0;
  Series<Scalar> ghat;
  std::vector<Series<Scalar>> fhat;

  std::size_t order() const {
    std::size_t n = ghat.order();
    for (const auto& f : fhat) n = std::min(n, f.order());
    return n;
  }
};

/// ghat = sum g_k t^k and fhat_i = sum f_{i,k} t^{k+1}, where g = sum g_k t^{k ell} and
/// f_i = sum f_{i,k} t^{k ell + 1}.
template <typename Scalar>
CompressedSpec<Scalar> compress_spec(const MultiRiordanSpec<Scalar>& a) {
  detail::require_kind(a, ArrayKind::proper, "compress_spec");
  CompressedSpec<Scalar> out;
  out.ell = a.ell();
  out.ghat = stride_compact(a.g(), a.ell(), 0);
  for (const auto& f : a.multipliers()) out.fhat.push_back(shift_up(stride_compact(f, a.ell(), 1), 1));
  return out;
}

/// Inverse of compress_spec: t -> t^ell on ghat, and fhat_i -> t · (fhat_i / t)(t^ell).
template <typename Scalar>
MultiRiordanSpec<Scalar> expand_spec(const CompressedSpec<Scalar>& c) {
  std::vector<Series<Scalar>> f;
  for (const auto& fh : c.fhat) f.push_back(shift_up(stride_expand(shift_down(fh, 1), c.ell), 1));
  return MultiRiordanSpec<Scalar>::proper(stride_expand(c.ghat, c.ell), std::move(f));
}

/// Builds the compressed array from its hat-functions; column k = qell + m is
/// ghat (fhat_1···fhat_ell)^q fhat_1···fhat_m.
template <typename Scalar>
Matrix<Scalar> build(const CompressedSpec<Scalar>& c, std::size_t rows, std::size_t cols) {
  if (rows > 0 && c.order() < rows - 1)
    raise(ErrorKind::InsufficientTruncation,
          "compressed spec is exact to order " + std::to_string(c.order()) + ", " +
              std::to_string(rows) + " rows need " + std::to_string(rows - 1));
  return detail::build_columns(c.ghat, c.fhat, rows, cols);
}

/// dhat_{n,k} = d_{n ell - (ell-1) k, k} for n >= k, and 0 above the diagonal.
template <typename Scalar>
Matrix<Scalar> compress(const MultiRiordanSpec<Scalar>& a, std::size_t rows, std::size_t cols) {
  detail::require_kind(a, ArrayKind::proper, "compress");
  Matrix<Scalar> out = zeros<Scalar>(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  if (rows == 0 || cols == 0) return out;
  const std::size_t l = a.ell();
  const std::size_t source_rows = (rows - 1) * l + 1;
  const Matrix<Scalar> d = mbuild(a, source_rows, std::min(cols, rows));
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t k = 0; k <= n && k < cols; ++k)
      out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) =
          d(static_cast<Eigen::Index>(n * l - (l - 1) * k), static_cast<Eigen::Index>(k));
  return out;
}

/// Compression of a multiple type array: every series is in t^ell and is replaced by its
/// t^{1/ell} substitution; the result is the square cyclic array of the compacted series.
/// Entry (n, k) equals d_{n ell, k} of the source.
template <typename Scalar>
Matrix<Scalar> compress_type(const MultiRiordanSpec<Scalar>& a, std::size_t rows, std::size_t cols) {
  detail::require_kind(a, ArrayKind::type, "compress_type");
  const std::size_t l = a.ell();
  const Series<Scalar> ghat = stride_compact(a.g(), l, 0);
  std::vector<Series<Scalar>> hhat;
  for (const auto& f : a.multipliers()) hhat.push_back(stride_compact(f, l, 0));
  std::size_t order = ghat.order();
  for (const auto& h : hhat) order = std::min(order, h.order());
  const std::size_t need = detail::required_order(ArrayKind::type, rows, cols);
  if (order < need)
    raise(ErrorKind::InsufficientTruncation,
          "compacted series are exact to order " + std::to_string(order) + ", need " +
              std::to_string(need));
  return detail::build_columns(ghat, hhat, rows, cols);
}

/// Checks, for a proper multiple array, that the source A- and Z_m-sequences characterize the
/// compression. Functional identities, with rho^ell = fhat_1···fhat_ell / t^{ell-1}:
///   A(rho)   = fhat_1···fhat_ell / t^ell
///   Z_0(rho) = (1 - g_0 / ghat) / t
///   Z_m(rho) = (1 - g_0 f_{1,1}···f_{m,1} t^m / (ghat fhat_1···fhat_m)) / t
/// A series in t^ell evaluated at rho only involves rho^ell, so no root is extracted.
/// Recurrences on the compressed array:
///   a-recurrence   dhat_{n,k} = sum_j a_j dhat_{n-ell+j(ell-1), k+(j-1)ell}   (k >= ell)
///   z<m>-recurrence dhat_{n,m} = sum_j z_{m,j} dhat_{n-1+j(ell-1), m+j ell}  (n != m)
template <typename Scalar>
RecurrenceReport<Scalar> compressed_seq_check(const MultiRiordanSpec<Scalar>& a, std::size_t depth) {
  detail::require_kind(a, ArrayKind::proper, "compressed_seq_check");
  RecurrenceReport<Scalar> report;
  report.depth = depth;
  if (depth == 0) return report;
  const std::size_t l = a.ell();
  const SeqChar<Scalar> seq = mseq(a);
  const CompressedSpec<Scalar> c = compress_spec(a);

  // functional identities, coefficientwise up to the common exact order
  Series<Scalar> fprod = c.fhat[0];
  for (std::size_t i = 1; i < l; ++i) fprod = fprod * c.fhat[i];
  const Series<Scalar> rho_l = shift_down(fprod, l - 1);
  auto at_rho = [&](const Series<Scalar>& s) { return compose(stride_compact(s, l, 0), rho_l); };
  auto compare = [&](const std::string& relation, const Series<Scalar>& lhs, const Series<Scalar>& rhs) {
    const std::size_t n = std::min({lhs.order(), rhs.order(), depth - 1});
    for (std::size_t i = 0; i <= n; ++i) detail::record(report, relation.c_str(), i, 0, lhs[i], rhs[i]);
  };
  compare("A-identity", at_rho(seq.a), shift_down(fprod, l));
  const Scalar g0 = a.g()[0];
  Series<Scalar> partial = c.ghat;
  Scalar lead = g0;
  for (std::size_t m = 0; m < l; ++m) {
    if (m > 0) {
      partial = partial * c.fhat[m - 1];
      lead *= a.f(m - 1)[1];
    }
    // lead t^m / (ghat fhat_1···fhat_m), with the t^m cancelled before dividing
    const Series<Scalar> ratio = lead * reciprocal(shift_down(partial, m));
    compare("Z" + std::to_string(m) + "-identity", at_rho(seq.z[m]), shift_down(Scalar(1) - ratio, 1));
  }

  // recurrences; rows referenced on the right never exceed (depth-1)·ell, and entries in
  // later columns of those rows vanish by triangularity
  const std::size_t big = (depth - 1) * l + 1;
  const Matrix<Scalar> d = build(c, big, big);
  auto at = [&](long n, long k) -> Scalar {
    if (n < 0 || k < 0 || n >= static_cast<long>(big) || k >= static_cast<long>(big)) return Scalar(0);
    return d(n, k);
  };
  auto coeff = [&](const Series<Scalar>& s, long j) {
    return static_cast<std::size_t>(j) * l <= s.order() ? s[static_cast<std::size_t>(j) * l] : Scalar(0);
  };
  const auto L = static_cast<long>(l);
  const auto n_max = static_cast<long>(depth);
  for (long n = 0; n < n_max; ++n) {
    for (long k = L; k < n_max; ++k) {
      Scalar rhs(0);
      for (long j = 0; j <= n - k; ++j) rhs += coeff(seq.a, j) * at(n - L + j * (L - 1), k + (j - 1) * L);
      detail::record(report, "a-recurrence", n, k, at(n, k), rhs);
    }
    for (long m = 0; m < L && m < n_max; ++m) {
      if (n == m) continue;
      Scalar rhs(0);
      for (long j = 0; j <= n - 1 - m; ++j) rhs += coeff(seq.z[m], j) * at(n - 1 + j * (L - 1), m + j * L);
      const std::string relation = "z" + std::to_string(m) + "-recurrence";
      detail::record(report, relation.c_str(), n, m, at(n, m), rhs);
    }
  }
  return report;
}

/// A failing minor: determinant of the submatrix on `rows` x `cols`.
template <typename Scalar>
struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Scalar value;
};

template <typename Scalar>
struct TPReport {
  std::size_t max_order = 0;
  std::size_t block = 0;
  std::size_t minors_checked = 0;
  std::optional<MinorWitness<Scalar>> witness;

  bool ok() const { return !witness.has_value(); }
};

inline constexpr std::size_t default_minor_budget = 2'000'000;

namespace detail {

inline double binomial_count(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

/// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Number of minors of order 1..max_order in a rows x cols matrix.
inline double minor_count(std::size_t rows, std::size_t cols, std::size_t max_order) {
  double total = 0.0;
  for (std::size_t k = 1; k <= max_order; ++k)
    total += detail::binomial_count(rows, k) * detail::binomial_count(cols, k);
  return total;
}

/// Evaluates every minor of order <= max_order exactly, by increasing order and then by
/// lexicographic (row set, column set). Stops at the first negative minor.
template <typename Scalar>
TPReport<Scalar> tp_check(const Matrix<Scalar>& m, std::size_t max_order,
                          std::size_t budget = default_minor_budget) {
  TPReport<Scalar> report;
  report.max_order = max_order;
  report.block = static_cast<std::size_t>(m.rows());
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  const std::size_t top = std::min({max_order, rows, cols});
  const double needed = minor_count(rows, cols, top);
  if (needed > static_cast<double>(budget)) throw BudgetError(static_cast<std::size_t>(needed), budget);

  Matrix<Scalar> sub;
  for (std::size_t k = 1; k <= top; ++k) {
    sub.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    std::vector<std::size_t> ri(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      std::vector<std::size_t> ci(k);
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(ri[i]), static_cast<Eigen::Index>(ci[j]));
        const Scalar det = determinant(sub);
        ++report.minors_checked;
        if (det < Scalar(0)) {
          report.witness = MinorWitness<Scalar>{ri, ci, det};
          return report;
        }
      } while (detail::next_subset(ci, cols));
    } while (detail::next_subset(ri, rows));
  }
  return report;
}

/// Lower-triangular Toeplitz matrix [a_{i-j}] of size terms x terms; missing terms are 0.
template <typename Scalar>
Matrix<Scalar> toeplitz(const std::vector<Scalar>& seq, std::size_t terms) {
  Matrix<Scalar> t = zeros<Scalar>(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(terms));
  for (std::size_t i = 0; i < terms; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (i - j < seq.size())
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = seq[i - j];
  return t;
}

/// Finite Polya-frequency test: minors of order <= depth of the terms x terms Toeplitz matrix.
template <typename Scalar>
TPReport<Scalar> pf_check(const std::vector<Scalar>& seq, std::size_t depth, std::size_t terms,
                          std::size_t budget = default_minor_budget) {
  return tp_check(toeplitz(seq, terms), depth, budget);
}

}  // namespace mrd

#endif  // MRD_COMPRESS_HPP
