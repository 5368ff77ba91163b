#pragma once

#include <functional>

#include <Eigen/Dense>

namespace curvcheck::problems {

/// Callbacks of an equality-constrained problem min f(x) s.t. c(x) = 0.
/// The Lagrangian is L(x, lambda) = f(x) - lambda^T c(x).
struct NlpFunctions {
  std::function<double(const Eigen::VectorXd&)> objective;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> constraints;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // M x N
};

}  // namespace curvcheck::problems
