#pragma once

#include <Eigen/Dense>

namespace curvcheck::problems {

struct NearSingularKkt {
  Eigen::MatrixXd K;   // [H A^T; A 0]
  Eigen::MatrixXd A;   // A' with the dependent row a_M appended
  double bound = 0.0;  // ||eps||_2 after normalization; min |eig(K)| <= bound
};

/// KKT matrix whose last constraint row a_M = sum_m beta_m a_m + eps is
/// almost dependent on the rows a_m of A'. beta and eps are scaled together
/// so that ||a_M||_2 = 1; K then has an eigenvalue of magnitude at most the
/// scaled ||eps||_2, whatever H is. Throws Error(CannotNormalize) when
/// a_M = 0.
NearSingularKkt near_rank_deficient_kkt(const Eigen::MatrixXd& H, const Eigen::MatrixXd& A_prime,
                                        const Eigen::VectorXd& beta, const Eigen::VectorXd& eps);

}  // namespace curvcheck::problems
