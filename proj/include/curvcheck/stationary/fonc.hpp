#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "curvcheck/problems/nlp.hpp"

namespace curvcheck::stationary {

struct FoncResidual {
  double stationarity = 0.0;  // ||grad f - A^T lambda||_inf
  double feasibility = 0.0;   // ||c||_inf
};

/// Throws Error(EvaluationFailure) if a callback throws or returns
/// non-finite values.
FoncResidual fonc_residual(const problems::NlpFunctions& fn, const Eigen::VectorXd& x, const Eigen::VectorXd& lambda);

/// Least-squares multipliers: argmin ||A^T lambda - g||_2.
Eigen::VectorXd least_squares_multipliers(const Eigen::MatrixXd& A, const Eigen::VectorXd& g);

struct FoncPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd lambda;
  double energy = 0.0;
  double fonc_residual = 0.0;
  double feas_residual = 0.0;
  std::size_t iterations = 0;
};

struct ThomsonSolveOptions {
  double tol_fonc = 1e-10;  // on the Riemannian gradient, infinity norm
  double tol_feas = 1e-12;
  std::size_t max_iterations = 200000;
  /// Descent may hand over to Newton polishing once its gradient is this
  /// small; a stall above it is reported as MaxIterations.
  double polish_from = 1e-4;
};

/// Riemannian gradient descent with Armijo backtracking on the product of
/// spheres from a seeded random start, then a rigid rotation putting x_1 on
/// the first axis and x_2 in the first coordinate plane, then least-squares
/// multipliers for the orthogonally invariant constraints. A few Newton
/// steps on the first-order conditions finish the job when descent stalls
/// at working precision. Throws Error(MaxIterations) when the tolerances
/// are not met.
FoncPoint solve_thomson(int K, std::uint64_t seed, const ThomsonSolveOptions& options = {});

/// Rotation (and, if needed, reflection) of the stacked points into the frame
/// described above. Entries below 1e-12 in magnitude that the frame forces
/// to zero are set to exactly zero.
Eigen::VectorXd canonical_frame(const Eigen::VectorXd& x);

}  // namespace curvcheck::stationary
