#include "curvcheck/problems/thomson.hpp"

#include <cmath>
#include <string>

#include "curvcheck/error.hpp"

namespace curvcheck::problems {

namespace {

Eigen::Vector3d point(const Eigen::VectorXd& x, int k) { return x.segment<3>(3 * k); }

double pair_distance(const Eigen::Vector3d& d, int k, int m) {
  const double r = d.norm();
  if (!(r > 0)) {
    throw Error(ErrorCode::CoincidentPoints,
                "points " + std::to_string(k + 1) + " and " + std::to_string(m + 1) + " coincide");
  }
  return r;
}

}  // namespace

Thomson::Thomson(int K, ThomsonVariant variant) : K_(K), variant_(variant) {
  if (K < 2) throw Error(ErrorCode::InvalidArgument, "Thomson problem needs K >= 2");
}

Eigen::Index Thomson::constraints() const noexcept {
  return variant_ == ThomsonVariant::OrthogonallyInvariant ? K_ + 3 : K_;
}

void Thomson::check_size(const Eigen::VectorXd& x) const {
  if (x.size() != variables()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(variables()) + " coordinates");
  }
}

double Thomson::energy(const Eigen::VectorXd& x) const {
  check_size(x);
  double f = 0.0;
  for (int k = 0; k < K_; ++k)
    for (int m = k + 1; m < K_; ++m) f += 1.0 / pair_distance(point(x, k) - point(x, m), k, m);
  return f;
}

Eigen::VectorXd Thomson::gradient(const Eigen::VectorXd& x) const {
  check_size(x);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
  for (int k = 0; k < K_; ++k) {
    for (int m = k + 1; m < K_; ++m) {
      const Eigen::Vector3d d = point(x, k) - point(x, m);
      const double r = pair_distance(d, k, m);
      const Eigen::Vector3d gk = -d / (r * r * r);
      g.segment<3>(3 * k) += gk;
      g.segment<3>(3 * m) -= gk;
    }
  }
  return g;
}

Eigen::MatrixXd Thomson::energy_hessian(const Eigen::VectorXd& x) const {
  check_size(x);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(x.size(), x.size());
  for (int k = 0; k < K_; ++k) {
    for (int m = k + 1; m < K_; ++m) {
      const Eigen::Vector3d d = point(x, k) - point(x, m);
      const double r = pair_distance(d, k, m);
      const double r3 = r * r * r;
      const Eigen::Matrix3d G = -Eigen::Matrix3d::Identity() / r3 + 3.0 * d * d.transpose() / (r3 * r * r);
      H.block<3, 3>(3 * k, 3 * k) += G;
      H.block<3, 3>(3 * m, 3 * m) += G;
      H.block<3, 3>(3 * k, 3 * m) -= G;
      H.block<3, 3>(3 * m, 3 * k) -= G;
    }
  }
  return H;
}

Eigen::VectorXd Thomson::constraint_values(const Eigen::VectorXd& x) const {
  check_size(x);
  Eigen::VectorXd c(constraints());
  for (int k = 0; k < K_; ++k) c(k) = point(x, k).squaredNorm() / 2 - 0.5;
  if (variant_ == ThomsonVariant::OrthogonallyInvariant) {
    c(K_) = x(1);
    c(K_ + 1) = x(2);
    c(K_ + 2) = x(5);
  }
  return c;
}

Eigen::MatrixXd Thomson::jacobian(const Eigen::VectorXd& x) const {
  check_size(x);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(constraints(), variables());
  for (int k = 0; k < K_; ++k) A.block<1, 3>(k, 3 * k) = point(x, k).transpose();
  if (variant_ == ThomsonVariant::OrthogonallyInvariant) {
    A(K_, 1) = 1.0;
    A(K_ + 1, 2) = 1.0;
    A(K_ + 2, 5) = 1.0;
  }
  return A;
}

Eigen::VectorXd Thomson::lagrangian_gradient(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) const {
  if (lambda.size() != constraints()) throw Error(ErrorCode::DimensionMismatch, "multiplier count");
  return gradient(x) - jacobian(x).transpose() * lambda;
}

Eigen::MatrixXd Thomson::lagrangian_hessian(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) const {
  if (lambda.size() != constraints()) throw Error(ErrorCode::DimensionMismatch, "multiplier count");
  Eigen::MatrixXd H = energy_hessian(x);
  for (int k = 0; k < K_; ++k) H.block<3, 3>(3 * k, 3 * k).diagonal().array() -= lambda(k);
  return H;
}

NlpFunctions Thomson::functions() const {
  NlpFunctions fn;
  fn.objective = [*this](const Eigen::VectorXd& x) { return energy(x); };
  fn.gradient = [*this](const Eigen::VectorXd& x) { return gradient(x); };
  fn.constraints = [*this](const Eigen::VectorXd& x) { return constraint_values(x); };
  fn.jacobian = [*this](const Eigen::VectorXd& x) { return jacobian(x); };
  return fn;
}

sosc::Problem Thomson::sosc_problem(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda, bool analytic,
                                    double fd_sigma) const {
  check_size(x);
  if (lambda.size() != constraints()) throw Error(ErrorCode::DimensionMismatch, "multiplier count");
  auto H = analytic ? linalg::HessianOperator::dense(lagrangian_hessian(x, lambda))
                    : linalg::HessianOperator::finite_difference(
                          [self = *this, lambda](const Eigen::VectorXd& y) { return self.lagrangian_gradient(y, lambda); },
                          x, fd_sigma);
  sosc::Problem p(linalg::ConstraintJacobian(jacobian(x)), std::move(H));
  p.x = x;
  p.lambda = lambda;
  p.provenance = {{"kind", "thomson"},
                  {"K", K_},
                  {"variant", variant_ == ThomsonVariant::Plain ? "plain" : "orthogonally-invariant"},
                  {"hessian", analytic ? "analytic" : "finite-difference"}};
  if (!analytic && fd_sigma > 0) p.provenance["fd_sigma"] = fd_sigma;
  return p;
}

double thomson_reference_energy(int K) {
  switch (K) {
    case 2: return 0.5;
    case 3: return std::sqrt(3.0);
    case 4: return 6.0 * std::sqrt(3.0 / 8.0);
    default: throw Error(ErrorCode::InvalidArgument, "no closed-form energy for K = " + std::to_string(K));
  }
}

}  // namespace curvcheck::problems
