#include "curvcheck/problems/generator.hpp"

#include <cmath>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/hessian_operator.hpp"

namespace curvcheck::problems {

std::string_view to_string(Conditioning c) {
  return c == Conditioning::WellConditioned ? "well" : "ill";
}

std::optional<Conditioning> conditioning_from_string(std::string_view name) {
  if (name == "well" || name == "well-conditioned") return Conditioning::WellConditioned;
  if (name == "ill" || name == "ill-conditioned") return Conditioning::IllConditioned;
  return std::nullopt;
}

namespace {

Eigen::MatrixXd gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Eigen::MatrixXd G(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) G(i, j) = rng.normal();
  return G;
}

double draw_nonzero(Rng& rng, double stddev) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double r = stddev * rng.normal();
    if (std::abs(r) >= 1e-300) return r;
  }
  throw Error(ErrorCode::DegenerateR, "could not draw a nonzero diagonal entry of R");
}

}  // namespace

Eigen::MatrixXd random_orthogonal(Eigen::Index n, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "orthogonal matrix order must be positive");
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian(n, n, rng));
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (packed(j, j) < 0) Q.col(j) = -Q.col(j);
  }
  return Q;
}

Eigen::MatrixXd random_symmetric_with_eigs(const Eigen::VectorXd& eigs, Rng& rng) {
  if (!eigs.allFinite()) throw Error(ErrorCode::InvalidArgument, "eigenvalues must be finite");
  const Eigen::MatrixXd Q = random_orthogonal(eigs.size(), rng);
  Eigen::MatrixXd S = Q * eigs.asDiagonal() * Q.transpose();
  return (S + S.transpose()) / 2;
}

Eigen::MatrixXd random_r_factor(Eigen::Index M, Conditioning c, Rng& rng) {
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(M, M);
  for (Eigen::Index j = 0; j < M; ++j) {
    for (Eigen::Index i = 0; i < j; ++i) R(i, j) = rng.normal();
    const double sd = c == Conditioning::WellConditioned ? static_cast<double>(M - j) : 1.0;
    R(j, j) = draw_nonzero(rng, sd);
  }
  return R;
}

sosc::Problem generate(const GeneratorSpec& spec) {
  const Eigen::Index N = spec.N;
  const Eigen::Index M = spec.M;
  const Eigen::Index P = spec.P;
  if (N < 2 || M < 1 || M >= N || P < 0 || P > N) {
    throw Error(ErrorCode::InvalidArgument, "generator needs N >= 2, 1 <= M < N, 0 <= P <= N");
  }
  if (!(spec.eig_lo > 0) || !(spec.eig_hi >= spec.eig_lo)) {
    throw Error(ErrorCode::InvalidArgument, "eigenvalue range must satisfy 0 < lo <= hi");
  }
  const Eigen::Index L = N - M;
  Rng rng(spec.seed);

  const Eigen::MatrixXd Q = random_orthogonal(N, rng);
  Eigen::VectorXd lambda(N);
  const double log_lo = std::log(spec.eig_lo);
  const double log_hi = std::log(spec.eig_hi);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double mag = std::exp(rng.uniform(log_lo, log_hi));
    lambda(i) = i < P ? mag : -mag;
  }
  Eigen::MatrixXd H = Q * lambda.asDiagonal() * Q.transpose();

  const Eigen::MatrixXd R = random_r_factor(M, spec.conditioning, rng);
  Eigen::MatrixXd A = R.transpose() * Q.rightCols(M).transpose();

  sosc::Problem problem(linalg::ConstraintJacobian(std::move(A)), linalg::HessianOperator::dense(H));
  problem.truth = spec.truth();
  problem.exact_basis = Q.leftCols(L);
  problem.provenance = {{"kind", "generator"},
                        {"seed", spec.seed},
                        {"N", N},
                        {"M", M},
                        {"P", P},
                        {"conditioning", std::string(to_string(spec.conditioning))},
                        {"eig_lo", spec.eig_lo},
                        {"eig_hi", spec.eig_hi}};
  return problem;
}

GeneratorSpec random_spec(Eigen::Index N, Conditioning c, std::uint64_t base_seed, std::uint64_t index) {
  GeneratorSpec spec;
  spec.N = N;
  spec.conditioning = c;
  spec.seed = derive_seed(base_seed, index);
  Rng rng(derive_seed(spec.seed, 0x4d50));
  spec.M = rng.uniform_int(1, N - 1);
  spec.P = rng.uniform_int(0, N);
  return spec;
}

double sosc_truth_probability(Eigen::Index N) {
  return static_cast<double>(N + 2) / (2.0 * static_cast<double>(N + 1));
}

double sample_truth_rate(Eigen::Index N, std::size_t trials, Rng& rng) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "need N >= 2");
  std::size_t holds = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto M = rng.uniform_int(1, N - 1);
    const auto P = rng.uniform_int(0, N);
    if (N - M <= P) ++holds;
  }
  return static_cast<double>(holds) / static_cast<double>(trials);
}

}  // namespace curvcheck::problems
