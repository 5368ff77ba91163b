#pragma once

#include <Eigen/Dense>

namespace curvcheck::problems {

/// K = [H A^T; A 0], (N+M) x (N+M).
Eigen::MatrixXd build_kkt(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A);

/// Bordered Hessian B = [0 A; A^T H], (N+M) x (N+M).
Eigen::MatrixXd build_bordered(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A);

}  // namespace curvcheck::problems
