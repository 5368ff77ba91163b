#pragma once

#include <ostream>
#include <vector>

#include <Eigen/Dense>

namespace curvcheck::linalg {

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

/// P K P^T = L D L^T with unit lower-triangular L and block-diagonal D made
/// of 1x1 and 2x2 blocks (Bunch-Kaufman partial pivoting).
struct LdlFactorization {
  std::vector<Eigen::Index> perm;   // (P K P^T)(i, j) = K(perm[i], perm[j])
  Eigen::MatrixXd L;                // unit lower triangular
  Eigen::VectorXd diag;             // D(i, i)
  Eigen::VectorXd offdiag;          // D(i+1, i); nonzero only inside 2x2 blocks
  std::vector<int> block_size;      // 1 or 2, one entry per block
  Inertia inertia;

  Eigen::MatrixXd block_diagonal() const;
  Eigen::MatrixXd permutation_matrix() const;
  /// P^T L D L^T P, for reconstruction checks.
  Eigen::MatrixXd reconstruct() const;
};

/// Factors a symmetric matrix (only the lower triangle is read). Always
/// completes; exactly-zero pivots are counted in inertia.zero.
LdlFactorization ldl_factor(const Eigen::MatrixXd& K);

}  // namespace curvcheck::linalg
