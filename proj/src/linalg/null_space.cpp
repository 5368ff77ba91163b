#include "curvcheck/linalg/null_space.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/householder.hpp"

namespace curvcheck::linalg {

ConstraintJacobian::ConstraintJacobian(Eigen::MatrixXd A) : A_(std::move(A)) {
  if (A_.rows() < 1 || A_.cols() < 2) {
    throw Error(ErrorCode::InvalidArgument, "constraint Jacobian must have M >= 1 rows and N >= 2 columns");
  }
  if (A_.rows() >= A_.cols()) {
    throw Error(ErrorCode::InvalidArgument, "constraint Jacobian needs M < N (got M=" +
                                                std::to_string(A_.rows()) + ", N=" + std::to_string(A_.cols()) +
                                                ")");
  }
  if (!A_.allFinite()) throw Error(ErrorCode::InvalidArgument, "constraint Jacobian has non-finite entries");
}

double default_rank_tolerance(const Eigen::MatrixXd& A) {
  return std::sqrt(std::numeric_limits<double>::epsilon()) * A.norm();
}

std::string_view to_string(BasisMethod method) {
  switch (method) {
    case BasisMethod::SvdOfA: return "svd";
    case BasisMethod::QrOfAT: return "qr-at";
    case BasisMethod::QrOfA: return "qr-a";
    case BasisMethod::LuOfA: return "lu-a";
  }
  return "unknown";
}

std::optional<BasisMethod> basis_method_from_string(std::string_view name) {
  if (name == "svd") return BasisMethod::SvdOfA;
  if (name == "qr-at" || name == "qr") return BasisMethod::QrOfAT;
  if (name == "qr-a") return BasisMethod::QrOfA;
  if (name == "lu-a" || name == "lu") return BasisMethod::LuOfA;
  return std::nullopt;
}

namespace {

void check_pivot(double value, double tol, Eigen::Index j) {
  if (!(std::abs(value) > tol)) {
    throw Error(ErrorCode::RankDeficient,
                "pivot " + std::to_string(j) + " of magnitude " + std::to_string(std::abs(value)) +
                    " is below the rank tolerance " + std::to_string(tol));
  }
}

// [-T^{-1} S; I] for upper-triangular T.
Eigen::MatrixXd triangular_basis(const Eigen::MatrixXd& T, const Eigen::MatrixXd& S) {
  const Eigen::Index M = T.rows();
  const Eigen::Index L = S.cols();
  Eigen::MatrixXd W(M + L, L);
  W.topRows(M) = -T.triangularView<Eigen::Upper>().solve(S);
  W.bottomRows(L).setIdentity();
  return W;
}

}  // namespace

NullSpaceBasis null_space_basis(const ConstraintJacobian& jac, BasisMethod method, std::optional<double> tol_rank) {
  const Eigen::MatrixXd& A = jac.matrix();
  const Eigen::Index M = jac.constraints();
  const Eigen::Index N = jac.variables();
  const Eigen::Index L = N - M;
  const double tol = tol_rank.value_or(default_rank_tolerance(A));

  NullSpaceBasis basis;
  basis.method = method;
  switch (method) {
    case BasisMethod::SvdOfA: {
      Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      check_pivot(sv(M - 1), tol, M - 1);
      basis.W = svd.matrixV().rightCols(L);
      basis.orthonormal = true;
      break;
    }
    case BasisMethod::QrOfAT: {
      HouseholderQr qr(A.transpose());
      for (Eigen::Index j = 0; j < M; ++j) check_pivot(qr.r_diag(j), tol, j);
      basis.W = qr.q_columns(M, L);
      basis.orthonormal = true;
      break;
    }
    case BasisMethod::QrOfA: {
      HouseholderQr qr(A);
      for (Eigen::Index j = 0; j < M; ++j) check_pivot(qr.r_diag(j), tol, j);
      const Eigen::MatrixXd RS = qr.r();
      basis.W = triangular_basis(RS.leftCols(M), RS.rightCols(L));
      break;
    }
    case BasisMethod::LuOfA: {
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(A.leftCols(M));
      const Eigen::MatrixXd U = lu.matrixLU().triangularView<Eigen::Upper>();
      for (Eigen::Index j = 0; j < M; ++j) check_pivot(U(j, j), tol, j);
      // S = L^{-1} P A_2
      Eigen::MatrixXd S = lu.permutationP() * A.rightCols(L);
      lu.matrixLU().triangularView<Eigen::UnitLower>().solveInPlace(S);
      basis.W = triangular_basis(U, S);
      break;
    }
  }
  return basis;
}

}  // namespace curvcheck::linalg
