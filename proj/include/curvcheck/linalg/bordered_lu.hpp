#pragma once

#include <vector>

#include <Eigen/Dense>

namespace curvcheck::linalg {

/// LU factorization P B = L U that can grow by one bordering row/column:
///
///   B' = [ B   b ]
///        [ b^T g ]
///
/// Pivots of the rows already factored stay as established; the incoming
/// row is eliminated last, so each update costs two triangular solves,
/// O(n^2), instead of a fresh O(n^3) factorization. The sign of det(B) is
/// tracked exactly for the computed factors.
class BorderedLu {
 public:
  /// Dense LU with partial pivoting. `capacity` reserves room for later
  /// updates. Throws Error(SingularMinor) on a pivot of magnitude
  /// <= tol_pivot * max|B| (exact zero for the default tol_pivot = 0).
  static BorderedLu factor(const Eigen::MatrixXd& B, Eigen::Index capacity = 0, double tol_pivot = 0.0);

  /// Borders the factored matrix with (b, gamma) and returns sign(det) of the
  /// enlarged matrix. Throws Error(SingularMinor) on a zero new pivot; the
  /// factorization is unchanged in that case.
  int update(const Eigen::VectorXd& b, double gamma);

  Eigen::Index size() const noexcept { return n_; }
  int determinant_sign() const noexcept { return sign_; }

  /// Factors and permutation of the current matrix (for inspection/tests).
  Eigen::MatrixXd lower() const;
  Eigen::MatrixXd upper() const;
  const std::vector<Eigen::Index>& permutation() const noexcept { return perm_; }

 private:
  void ensure_capacity(Eigen::Index n);

  Eigen::Index n_ = 0;
  Eigen::MatrixXd L_;
  Eigen::MatrixXd U_;
  std::vector<Eigen::Index> perm_;  // row i of P B is row perm_[i] of B
  int sign_ = 1;
  double tol_pivot_ = 0.0;
  double scale_ = 0.0;
};

}  // namespace curvcheck::linalg
