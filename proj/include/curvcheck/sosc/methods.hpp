#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "curvcheck/linalg/hessian_operator.hpp"
#include "curvcheck/linalg/null_space.hpp"
#include "curvcheck/linalg/projector.hpp"
#include "curvcheck/sosc/verdict.hpp"

namespace curvcheck::sosc {

/// Gram-Schmidt ordering of the Cholesky and diagonalization sweeps.
/// Classical updates column n from all earlier columns at step n; Modified
/// pushes column n into all later columns as soon as its pivot is known.
enum class Variant { Classical, Modified };

struct CurvatureOptions {
  Variant variant = Variant::Modified;
  /// A pivot alpha_n with |alpha_n| <= tol_alpha * ||w_n|| ||v_n|| is reported
  /// as SemiDefiniteBoundary instead of Holds/Fails.
  double tol_alpha = 0.0;
};

/// Pivots and inner products produced by the implicit Cholesky sweep.
struct CholeskyTrace {
  std::vector<double> alphas;
  /// inner_products(m, k) = v_m^T w_k for m < k, as computed by the sweep.
  Eigen::MatrixXd inner_products;
};

/// Implicit Cholesky factorization of W^T H W using only the products H W.
/// Holds iff every pivot is positive. On a negative pivot at step n the
/// verdict carries d = W s from cholesky_negative_direction, re-verified
/// through the operator (one extra product).
SoscVerdict implicit_cholesky(const linalg::HessianOperator& H, const linalg::NullSpaceBasis& W,
                              const CurvatureOptions& options = {}, CholeskyTrace* trace = nullptr);

/// d = s_1 w_1 + ... + s_n w_n with s_n = 1 and, by back substitution,
/// s_m = -(sum_{k=m+1..n} s_k v_m^T w_k) / alpha_m, so that d^T H d = alpha_n.
/// `failed_step` is 1-based.
Eigen::VectorXd cholesky_negative_direction(const CholeskyTrace& trace, const Eigen::MatrixXd& W,
                                            std::size_t failed_step);

/// Oblique (H-conjugate) Gram-Schmidt on the columns of W, one product per
/// step. The failing conjugate vector v_n is itself the negative-curvature
/// direction.
SoscVerdict diagonalization(const linalg::HessianOperator& H, const linalg::NullSpaceBasis& W,
                            const CurvatureOptions& options = {});

struct PcgOptions {
  double tol = 1e-10;        // convergence threshold on |omega| = |r^T proj(r)|
  double tol_alpha = 0.0;    // curvature boundary, as in CurvatureOptions
  std::uint64_t seed = 0;    // restart-vector generator seed
  std::optional<Eigen::VectorXd> start;  // first right-hand side (projected); random if absent
  int max_draws = 3;         // attempts to draw a nonzero restart vector
};

/// Search directions of one PCG sweep, for inspection.
struct PcgSweep {
  std::vector<Eigen::VectorXd> directions;  // p_j
  std::vector<Eigen::VectorXd> products;    // H p_j
};

struct PcgTrace {
  std::vector<PcgSweep> sweeps;
};

/// Projected conjugate gradients, continued after early convergence by
/// restricting the projector to the complement of the products H p_j of the
/// converged sweep. Holds once L = dim(C) directions with positive curvature
/// have been generated.
SoscVerdict continued_pcg(const linalg::HessianOperator& H, linalg::Projector projector, const PcgOptions& options = {},
                          PcgTrace* trace = nullptr);

/// Signs of the trailing L leading principal minors of B = [0 A; A^T H],
/// computed by bordered LU updates. Holds iff all equal (-1)^M.
/// `minor_signs`, when given, receives the sign of det(B_i) for every minor
/// computed.
SoscVerdict bordered_hessian_test(const Eigen::MatrixXd& H, const linalg::ConstraintJacobian& A,
                                  double tol_pivot = 0.0, std::vector<int>* minor_signs = nullptr);

/// Inertia of K = [H A^T; A 0] from a Bunch-Kaufman LDL^T; Holds iff it is (N, M, 0).
SoscVerdict inertia_test(const Eigen::MatrixXd& H, const linalg::ConstraintJacobian& A);

}  // namespace curvcheck::sosc
