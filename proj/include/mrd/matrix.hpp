#ifndef MRD_MATRIX_HPP
#define MRD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mrd/error.hpp"
#include "mrd/rational.hpp"

namespace mrd {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;

template <typename Scalar>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

/// Exact determinant by Gaussian elimination; the first nonzero entry of each column
/// is the pivot, so no magnitude comparisons are involved.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  assert(n == a.cols());
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

template <typename Derived>
bool is_lower_triangular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = r + 1; c < m.cols(); ++c)
      if (!(m(r, c) == Scalar(0))) return false;
  return true;
}

/// Solves L·X = B for lower-triangular L with nonzero diagonal.
template <typename Scalar>
Matrix<Scalar> solve_lower(const Matrix<Scalar>& lower, const Matrix<Scalar>& rhs) {
  for (Eigen::Index i = 0; i < lower.rows(); ++i)
    if (lower(i, i) == Scalar(0))
      raise(ErrorKind::NotTriangularInvertible,
            "zero diagonal entry at index " + std::to_string(i));
  return lower.template triangularView<Eigen::Lower>().solve(rhs);
}

/// Rows `shift`..`shift + rows - 1` of m: the matrix moved up by `shift` rows.
template <typename Scalar>
Matrix<Scalar> up_shift(const Matrix<Scalar>& m, Eigen::Index shift, Eigen::Index rows) {
  assert(shift + rows <= m.rows());
  return m.middleRows(shift, rows);
}

/// Index of the first entry (row-major) where the matrices differ, or {-1, -1}.
template <typename Scalar>
std::pair<Eigen::Index, Eigen::Index> first_difference(const Matrix<Scalar>& a,
                                                       const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return {0, 0};
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return {r, c};
  return {-1, -1};
}

template <typename Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return first_difference(a, b).first < 0;
}

/// Builds a rational matrix from nested integer rows (test fixtures, printed displays).
inline RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  RationalMatrix m = zeros<Rational>(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

}  // namespace mrd

#endif  // MRD_MATRIX_HPP
