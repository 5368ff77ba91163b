#include "curvcheck/problems/near_singular.hpp"

#include "curvcheck/error.hpp"
#include "curvcheck/problems/kkt.hpp"

namespace curvcheck::problems {

NearSingularKkt near_rank_deficient_kkt(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A_prime,
                                        const Eigen::VectorXd& beta, const Eigen::VectorXd& eps) {
  const Eigen::Index N = H.rows();
  if (H.cols() != N || A_prime.cols() != N || eps.size() != N || beta.size() != A_prime.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "H is N x N, A' is (M-1) x N, beta has M-1 and eps N entries");
  }
  if (A_prime.rows() < 1 || beta.isZero(0.0)) {
    throw Error(ErrorCode::InvalidArgument, "beta must have a nonzero entry");
  }
  const Eigen::VectorXd raw = A_prime.transpose() * beta + eps;
  const double scale = raw.norm();
  if (!(scale > 0)) throw Error(ErrorCode::CannotNormalize, "sum of beta_m a_m + eps is zero");

  NearSingularKkt out;
  out.A.resize(A_prime.rows() + 1, N);
  out.A.topRows(A_prime.rows()) = A_prime;
  out.A.bottomRows(1) = (raw / scale).transpose();
  out.K = build_kkt(H, out.A);
  out.bound = eps.norm() / scale;
  return out;
}

}  // namespace curvcheck::problems
