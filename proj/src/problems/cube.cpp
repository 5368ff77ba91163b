#include "curvcheck/problems/cube.hpp"

#include <cmath>

#include "curvcheck/error.hpp"

namespace curvcheck::problems {

std::vector<double> cube_sqp_iterates(double x0, int count) {
  if (!(x0 > 0)) throw Error(ErrorCode::InvalidArgument, "x0 must be positive");
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "iterate count must be nonnegative");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + 1);
  double x = x0;
  for (int i = 0; i <= count; ++i) {
    xs.push_back(x);
    // Newton step for f'(x) = 3x^2: x - 3x^2 / 6x.
    x -= (3 * x * x) / (6 * x);
  }
  return xs;
}

sosc::Problem cube_limit_problem() {
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2, 2);
  H(1, 1) = 1.0;
  Eigen::MatrixXd A(1, 2);
  A << 0.0, 1.0;
  sosc::Problem p(linalg::ConstraintJacobian(A), linalg::HessianOperator::dense(H));
  p.x = Eigen::VectorXd::Zero(2);
  p.lambda = Eigen::VectorXd::Zero(1);
  p.truth = false;
  p.provenance = {{"kind", "cube"}};
  return p;
}

}  // namespace curvcheck::problems
