#pragma once

#include <Eigen/Dense>

#include "curvcheck/problems/nlp.hpp"
#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::problems {

/// K points x_1..x_K on the unit sphere in R^3, stacked as a 3K-vector,
/// minimizing the Coulomb energy sum_{k<m} 1/||x_k - x_m||.
///
/// Plain has the K sphere constraints ||x_k||^2/2 = 1/2. OrthogonallyInvariant
/// adds x_{1,2} = x_{1,3} = x_{2,3} = 0, which removes the rotational
/// freedom. Constraints are ordered spheres first.
enum class ThomsonVariant { Plain, OrthogonallyInvariant };

class Thomson {
 public:
  explicit Thomson(int K, ThomsonVariant variant = ThomsonVariant::OrthogonallyInvariant);

  int points() const noexcept { return K_; }
  ThomsonVariant variant() const noexcept { return variant_; }
  Eigen::Index variables() const noexcept { return 3 * K_; }
  Eigen::Index constraints() const noexcept;

  /// Throws Error(CoincidentPoints) when two points coincide.
  double energy(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd energy_hessian(const Eigen::VectorXd& x) const;

  Eigen::VectorXd constraint_values(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  /// grad f(x) - A(x)^T lambda.
  Eigen::VectorXd lagrangian_gradient(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) const;
  /// Analytic Hessian of the Lagrangian: the pair blocks of f minus
  /// lambda_k I on the sphere blocks.
  Eigen::MatrixXd lagrangian_hessian(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) const;

  NlpFunctions functions() const;

  /// SOSC problem at (x, lambda). With `analytic` the Hessian is explicit,
  /// otherwise it is forward differences of the Lagrangian gradient with
  /// step `fd_sigma` (<= 0 for the default).
  sosc::Problem sosc_problem(const Eigen::VectorXd& x, const Eigen::VectorXd& lambda, bool analytic = false,
                             double fd_sigma = 0.0) const;

 private:
  void check_size(const Eigen::VectorXd& x) const;

  int K_;
  ThomsonVariant variant_;
};

/// Known minimal energies: K = 2 antipodal, 3 equilateral, 4 tetrahedron.
double thomson_reference_energy(int K);

}  // namespace curvcheck::problems
