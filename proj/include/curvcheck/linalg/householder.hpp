#pragma once

#include <Eigen/Dense>

namespace curvcheck::linalg {

/// Householder QR of an m x n matrix, stored compactly (LAPACK geqrf layout:
/// R on and above the diagonal, reflector tails below it).
///
/// Tall factorizations can grow by appending columns; each append applies
/// the existing reflectors to the new column and generates one more
/// reflector, so the cost is O(m * cols) rather than a refactorization.
class HouseholderQr {
 public:
  HouseholderQr() = default;
  explicit HouseholderQr(const Eigen::MatrixXd& A);
  /// Empty factorization of an m x 0 matrix.
  static HouseholderQr empty(Eigen::Index rows);

  Eigen::Index rows() const noexcept { return rows_; }
  Eigen::Index cols() const noexcept { return cols_; }
  Eigen::Index reflectors() const noexcept { return std::min(rows_, cols_); }

  /// Appends column q. Returns false, leaving the factorization untouched,
  /// when the part of q orthogonal to the current columns has norm at most
  /// `tol * ||q||`.
  bool append_column(const Eigen::VectorXd& q, double tol);

  /// y <- Q^T y and y <- Q y, with Q the full m x m orthogonal factor.
  void apply_qt(Eigen::Ref<Eigen::VectorXd> y) const;
  void apply_q(Eigen::Ref<Eigen::VectorXd> y) const;

  /// Columns `first..first+count-1` of the full Q.
  Eigen::MatrixXd q_columns(Eigen::Index first, Eigen::Index count) const;

  /// Upper trapezoidal factor (min(m, n) x n).
  Eigen::MatrixXd r() const;
  double r_diag(Eigen::Index j) const { return packed_(j, j); }

 private:
  void reflect_column(Eigen::Index j);
  void apply_reflector(Eigen::Index j, Eigen::Ref<Eigen::VectorXd> y) const;

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  Eigen::MatrixXd packed_;
  Eigen::VectorXd tau_;
};

}  // namespace curvcheck::linalg
