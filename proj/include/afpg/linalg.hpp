#ifndef AFPG_LINALG_HPP
#define AFPG_LINALG_HPP

#include <stdexcept>

#include <Eigen/Core>

namespace afpg {

/// Solves A X = B by Gauss-Jordan elimination with first-nonzero pivoting.
/// Meant for exact scalars (Rational); every step is exact, so singularity is
/// detected reliably.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> solve_exact(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A,
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> B) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && A(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular matrix");
    if (pivot != col) {
      A.row(pivot).swap(A.row(col));
      B.row(pivot).swap(B.row(col));
    }
    const Scalar inv = Scalar(1) / A(col, col);
    A.row(col) *= inv;
    B.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || A(r, col) == Scalar(0)) continue;
      const Scalar factor = A(r, col);
      A.row(r) -= factor * A.row(col);
      B.row(r) -= factor * B.row(col);
    }
  }
  return B;
}

/// Rank of A over an exact field.
template <class Scalar>
Eigen::Index exact_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < A.cols() && rank < A.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < A.rows() && A(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == A.rows()) continue;
    A.row(pivot).swap(A.row(rank));
    for (Eigen::Index r = rank + 1; r < A.rows(); ++r) {
      if (A(r, col) == Scalar(0)) continue;
      const Scalar factor = A(r, col) / A(rank, col);
      A.row(r) -= factor * A.row(rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace afpg

#endif  // AFPG_LINALG_HPP
