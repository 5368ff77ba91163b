#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace curvcheck::linalg {

/// Constraint Jacobian A (M x N, rows are constraint gradients), M < N.
class ConstraintJacobian {
 public:
  explicit ConstraintJacobian(Eigen::MatrixXd A);

  const Eigen::MatrixXd& matrix() const noexcept { return A_; }
  Eigen::Index constraints() const noexcept { return A_.rows(); }
  Eigen::Index variables() const noexcept { return A_.cols(); }
  /// Dimension L = N - M of the feasible cone.
  Eigen::Index free_dimension() const noexcept { return A_.cols() - A_.rows(); }

 private:
  Eigen::MatrixXd A_;
};

/// sqrt(machine epsilon) * ||A||_F, the default full-row-rank guard.
double default_rank_tolerance(const Eigen::MatrixXd& A);

enum class BasisMethod { SvdOfA, QrOfAT, QrOfA, LuOfA };

std::string_view to_string(BasisMethod method);
std::optional<BasisMethod> basis_method_from_string(std::string_view name);

struct NullSpaceBasis {
  Eigen::MatrixXd W;  // N x L, columns span null(A)
  BasisMethod method = BasisMethod::QrOfAT;
  bool orthonormal = false;
};

/// Basis of null(A). Throws Error(RankDeficient) when A is not of full row
/// rank to `tol_rank` (LICQ failure); callers must not run SOSC tests then.
///
/// SvdOfA and QrOfAT give orthonormal bases. QrOfA and LuOfA give
/// W = [-T^{-1} S; I] from A = Q[R S] or PA = L[U S], which requires the
/// leading M x M block of A to be nonsingular.
NullSpaceBasis null_space_basis(const ConstraintJacobian& A, BasisMethod method = BasisMethod::QrOfAT,
                                std::optional<double> tol_rank = std::nullopt);

}  // namespace curvcheck::linalg
