#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "curvcheck/rng.hpp"
#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::problems {

enum class Conditioning { WellConditioned, IllConditioned };

std::string_view to_string(Conditioning c);
std::optional<Conditioning> conditioning_from_string(std::string_view name);

struct GeneratorSpec {
  Eigen::Index N = 10;
  Eigen::Index M = 1;  // 1..N-1
  Eigen::Index P = 0;  // number of positive eigenvalues, 0..N
  Conditioning conditioning = Conditioning::WellConditioned;
  double eig_lo = 0.1;  // eigenvalue magnitudes lie in [eig_lo, eig_hi]
  double eig_hi = 100.0;
  std::uint64_t seed = 0;

  /// SOSC holds for the generated problem iff L = N - M <= P.
  bool truth() const noexcept { return N - M <= P; }
};

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// signs of diag(R) folded into Q.
Eigen::MatrixXd random_orthogonal(Eigen::Index n, Rng& rng);

/// Q diag(eigs) Q^T with Haar Q.
Eigen::MatrixXd random_symmetric_with_eigs(const Eigen::VectorXd& eigs, Rng& rng);

/// Upper-triangular M x M factor R. Well-conditioned: r_ii ~ N(0, (M - i)^2)
/// for 0-based i, r_ij ~ N(0, 1) above the diagonal. Ill-conditioned: every
/// upper-triangular entry ~ N(0, 1). Diagonal draws below 1e-300 in
/// magnitude are redrawn.
Eigen::MatrixXd random_r_factor(Eigen::Index M, Conditioning c, Rng& rng);

/// H = Q blockdiag(Lambda+, Lambda-) Q^T and A^T = Q [0; R]: the null space
/// of A is spanned by the first L = N - M columns of Q, and the reduced
/// Hessian on that basis is diagonal with the first L drawn eigenvalues.
/// Eigenvalue magnitudes are log-uniform in [eig_lo, eig_hi].
sosc::Problem generate(const GeneratorSpec& spec);

/// Spec for trial `index` of a campaign seeded with `base_seed`: M uniform
/// in 1..N-1, P uniform in 0..N.
GeneratorSpec random_spec(Eigen::Index N, Conditioning c, std::uint64_t base_seed, std::uint64_t index);

/// (N + 2) / (2 (N + 1)): chance that SOSC holds for uniform M and P.
double sosc_truth_probability(Eigen::Index N);

/// Empirical fraction of uniform (M, P) draws with N - M <= P.
double sample_truth_rate(Eigen::Index N, std::size_t trials, Rng& rng);

}  // namespace curvcheck::problems
