#include "curvcheck/stationary/fonc.hpp"

#include <cmath>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/problems/thomson.hpp"
#include "curvcheck/rng.hpp"

namespace curvcheck::stationary {

FoncResidual fonc_residual(const problems::NlpFunctions& fn, const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) {
  Eigen::VectorXd g;
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  try {
    g = fn.gradient(x);
    c = fn.constraints(x);
    A = fn.jacobian(x);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::EvaluationFailure, std::string("callback failed: ") + e.what());
  }
  if (A.rows() != lambda.size() || A.cols() != x.size() || g.size() != x.size() || c.size() != lambda.size()) {
    throw Error(ErrorCode::DimensionMismatch, "callback results do not match x and lambda");
  }
  if (!g.allFinite() || !c.allFinite() || !A.allFinite()) {
    throw Error(ErrorCode::EvaluationFailure, "callback returned non-finite values");
  }
  return {(g - A.transpose() * lambda).lpNorm<Eigen::Infinity>(), c.lpNorm<Eigen::Infinity>()};
}

Eigen::VectorXd least_squares_multipliers(const Eigen::MatrixXd& A, const Eigen::VectorXd& g) {
  return A.transpose().colPivHouseholderQr().solve(g);
}

namespace {

// Tangent part of the energy gradient at each point.
Eigen::VectorXd riemannian_gradient(const Eigen::VectorXd& x, const Eigen::VectorXd& g, int K) {
  Eigen::VectorXd r = g;
  for (int k = 0; k < K; ++k) {
    const Eigen::Vector3d p = x.segment<3>(3 * k);
    r.segment<3>(3 * k) -= p.dot(g.segment<3>(3 * k)) * p;
  }
  return r;
}

Eigen::VectorXd retract(const Eigen::VectorXd& x, int K) {
  Eigen::VectorXd y = x;
  for (int k = 0; k < K; ++k) y.segment<3>(3 * k).normalize();
  return y;
}

// Unit vector orthogonal to u.
Eigen::Vector3d any_orthogonal(const Eigen::Vector3d& u) {
  Eigen::Index i;
  u.cwiseAbs().minCoeff(&i);
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e(i) = 1.0;
  return (e - e.dot(u) * u).normalized();
}

}  // namespace

Eigen::VectorXd canonical_frame(const Eigen::VectorXd& x) {
  if (x.size() < 6 || x.size() % 3 != 0) throw Error(ErrorCode::DimensionMismatch, "need at least two 3-vectors");
  const int K = static_cast<int>(x.size() / 3);
  const Eigen::Vector3d q1 = x.segment<3>(0).normalized();
  Eigen::Vector3d q2 = x.segment<3>(3) - x.segment<3>(3).dot(q1) * q1;
  if (q2.norm() <= 1e-15 * x.segment<3>(3).norm()) {
    // x_2 is (numerically) on the x_1 axis; any orthogonal q2 fixes the frame.
    q2 = any_orthogonal(q1);
  } else {
    q2.normalize();
    q2 -= q2.dot(q1) * q1;
    q2.normalize();
  }
  Eigen::Matrix3d Q;
  Q.col(0) = q1;
  Q.col(1) = q2;
  Q.col(2) = q1.cross(q2);

  Eigen::VectorXd y(x.size());
  for (int k = 0; k < K; ++k) y.segment<3>(3 * k) = Q.transpose() * x.segment<3>(3 * k);
  // The frame makes these exact zeros; round-off only leaves them tiny.
  for (int idx : {1, 2, 5}) {
    if (std::abs(y(idx)) < 1e-12) y(idx) = 0.0;
  }
  return y;
}

namespace {

// Newton iterations on the first-order conditions of the framed problem.
// Gradient descent alone stalls once the energy decrease it needs drops
// below the rounding error of f.
void newton_polish(const problems::Thomson& framed, Eigen::VectorXd& x, Eigen::VectorXd& lambda,
                   const ThomsonSolveOptions& options) {
  const int K = framed.points();
  const Eigen::Index N = framed.variables();
  const Eigen::Index M = framed.constraints();
  for (int it = 0; it < 50; ++it) {
    const Eigen::MatrixXd A = framed.jacobian(x);
    lambda = least_squares_multipliers(A, framed.gradient(x));
    const Eigen::VectorXd g = framed.lagrangian_gradient(x, lambda);
    const Eigen::VectorXd c = framed.constraint_values(x);
    if (g.lpNorm<Eigen::Infinity>() <= options.tol_fonc && c.lpNorm<Eigen::Infinity>() <= options.tol_feas) return;

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(N + M, N + M);
    kkt.topLeftCorner(N, N) = framed.lagrangian_hessian(x, lambda);
    kkt.topRightCorner(N, M) = A.transpose();
    kkt.bottomLeftCorner(M, N) = A;
    Eigen::VectorXd rhs(N + M);
    rhs << -g, -c;
    const Eigen::VectorXd step = kkt.partialPivLu().solve(rhs);
    if (!step.allFinite()) return;
    x += step.head(N);
    x = retract(x, K);
    for (int idx : {1, 2, 5}) x(idx) = 0.0;  // linear constraints, kept exactly
  }
}

}  // namespace

FoncPoint solve_thomson(int K, std::uint64_t seed, const ThomsonSolveOptions& options) {
  const problems::Thomson plain(K, problems::ThomsonVariant::Plain);
  Rng rng(seed);
  Eigen::VectorXd x(3 * K);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
  x = retract(x, K);

  double f = plain.energy(x);
  Eigen::VectorXd grad = riemannian_gradient(x, plain.gradient(x), K);
  double step = 0.1;
  std::size_t it = 0;
  for (; it < options.max_iterations; ++it) {
    if (grad.lpNorm<Eigen::Infinity>() <= options.tol_fonc) break;
    const double slope = grad.squaredNorm();
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      Eigen::VectorXd trial = retract(x - step * grad, K);
      double ft;
      try {
        ft = plain.energy(trial);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CoincidentPoints) throw;
        step /= 2;
        continue;
      }
      if (ft <= f - 1e-4 * step * slope) {
        x = std::move(trial);
        f = ft;
        accepted = true;
        break;
      }
      step /= 2;
    }
    if (!accepted) break;  // no decrease visible at working precision
    grad = riemannian_gradient(x, plain.gradient(x), K);
    step *= 2;
  }
  if (grad.lpNorm<Eigen::Infinity>() > options.polish_from) {
    throw Error(ErrorCode::MaxIterations, "Thomson descent stopped at gradient norm " +
                                              std::to_string(grad.lpNorm<Eigen::Infinity>()) + " after " +
                                              std::to_string(it) + " iterations");
  }

  const problems::Thomson framed(K, problems::ThomsonVariant::OrthogonallyInvariant);
  FoncPoint out;
  out.x = canonical_frame(x);
  out.lambda = least_squares_multipliers(framed.jacobian(out.x), framed.gradient(out.x));
  newton_polish(framed, out.x, out.lambda, options);
  const auto res = fonc_residual(framed.functions(), out.x, out.lambda);
  out.energy = framed.energy(out.x);
  out.fonc_residual = res.stationarity;
  out.feas_residual = res.feasibility;
  out.iterations = it;
  if (out.fonc_residual > options.tol_fonc || out.feas_residual > options.tol_feas) {
    throw Error(ErrorCode::MaxIterations, "Thomson point has first-order residual " +
                                              std::to_string(out.fonc_residual) + " and constraint residual " +
                                              std::to_string(out.feas_residual));
  }
  return out;
}

}  // namespace curvcheck::stationary
