#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

/// In-place reduced row echelon form over an exact field scalar.
/// Pivots are chosen as the first nonzero entry of each column, scanning
/// columns left to right.  Returns the pivot column indices.
template <class Scalar>
std::vector<Eigen::Index> rowReduce(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rankOf(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(rowReduce(m).size());
}

/// Solve A x = b exactly.  Inconsistent systems yield nullopt.  When the
/// system is underdetermined, free variables are set to zero, so the column
/// order of A is the caller's preference order for support.
template <class Scalar>
std::optional<Vector<Scalar>> solveFreeVarsZero(const Matrix<Scalar>& a,
                                                const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<Eigen::Index> pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Constant(a.cols(), Scalar(0));
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()); ++i)
    x(pivots[i]) = aug(i, a.cols());
  return x;
}

}  // namespace artin
