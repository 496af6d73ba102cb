#pragma once

// Exact Gaussian elimination on dense Eigen matrices. The scalar must be an
// exact field (Rational); there are no pivot thresholds, a pivot is any
// entry that is not exactly zero.

#include <Eigen/Dense>

#include <vector>

#include "morita/error.hpp"
#include "morita/exact/rational.hpp"

namespace morita {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

/// Reduced row echelon form computed in place; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> reduce_rows(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Matrix<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> r = m;
  reduce_rows(r);
  return r;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> r = m;
  return static_cast<Eigen::Index>(reduce_rows(r).size());
}

/// Columns form a basis of {v : m v = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> r = m;
  const auto pivots = reduce_rows(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto f = free[k];
    const auto kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], kk) = -r(static_cast<Eigen::Index>(i), f);
  }
  return basis;
}

/// Throws Error(SingularMatrix) when m is not square and invertible.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::SingularMatrix, "inverse of a non-square matrix");
  const auto n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  const auto pivots = reduce_rows(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n))
    throw Error(Errc::SingularMatrix, "matrix is singular");
  return aug.rightCols(n);
}

/// Integer matrix to rational matrix.
inline RMatrix to_rational(const ZMatrix& z) {
  return z.unaryExpr([](const Integer& v) { return Rational(v); });
}

}  // namespace morita
