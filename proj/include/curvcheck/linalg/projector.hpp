#pragma once

#include <optional>

#include <Eigen/Dense>

#include "curvcheck/linalg/householder.hpp"

namespace curvcheck::linalg {

/// Orthogonal projector onto null(A) ∩ span{q_1, ..., q_k}^⊥, backed by a
/// Householder QR of [A^T q_1 ... q_k].
///
/// proj(r) = r - [A^T Q_k] v with v the least-squares solution, evaluated
/// as Q diag(0, I) Q^T r. A may have zero rows (unconstrained case).
class Projector {
 public:
  /// Throws Error(RankDeficient) when A is not of full row rank to
  /// `tol_rank` (default sqrt(eps) * ||A||_F).
  explicit Projector(const Eigen::MatrixXd& A, std::optional<double> tol_rank = std::nullopt);
  /// Projector for the unconstrained case in R^n.
  static Projector identity(Eigen::Index n) { return Projector(Eigen::MatrixXd(0, n)); }

  Eigen::Index dimension() const noexcept { return qr_.rows(); }
  Eigen::Index constraints() const noexcept { return constraints_; }
  Eigen::Index appended() const noexcept { return qr_.cols() - constraints_; }
  /// Dimension of the subspace projected onto.
  Eigen::Index free_dimension() const noexcept { return qr_.rows() - qr_.cols(); }

  Eigen::VectorXd project(const Eigen::VectorXd& r) const;

  /// Restricts the range to q^⊥. Throws Error(DependentColumn) if q lies in
  /// the span of the current columns to `tol_rank * ||q||`; the projector
  /// is unchanged in that case.
  void append_column(const Eigen::VectorXd& q);
  /// Copying form of append_column.
  Projector with_column(const Eigen::VectorXd& q) const;

 private:
  HouseholderQr qr_;
  Eigen::Index constraints_ = 0;
  double relative_rank_tol_ = 0.0;
};

}  // namespace curvcheck::linalg
