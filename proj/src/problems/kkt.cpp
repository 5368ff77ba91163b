#include "curvcheck/problems/kkt.hpp"

#include "curvcheck/error.hpp"

namespace curvcheck::problems {

namespace {

void check_dims(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A) {
  if (H.rows() != H.cols() || A.cols() != H.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "H must be N x N and A must be M x N");
  }
}

}  // namespace

Eigen::MatrixXd build_kkt(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A) {
  check_dims(H, A);
  const Eigen::Index N = H.rows();
  const Eigen::Index M = A.rows();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N + M, N + M);
  K.topLeftCorner(N, N) = H;
  K.topRightCorner(N, M) = A.transpose();
  K.bottomLeftCorner(M, N) = A;
  return K;
}

Eigen::MatrixXd build_bordered(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A) {
  check_dims(H, A);
  const Eigen::Index N = H.rows();
  const Eigen::Index M = A.rows();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N + M, N + M);
  B.topRightCorner(M, N) = A;
  B.bottomLeftCorner(N, M) = A.transpose();
  B.bottomRightCorner(N, N) = H;
  return B;
}

}  // namespace curvcheck::problems
