#include <cmath>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/sosc/methods.hpp"

namespace curvcheck::sosc {

namespace {

enum class PivotKind { Positive, Negative, Boundary };

PivotKind classify(double alpha, double scale, double tol_alpha) {
  if (!(std::abs(alpha) > tol_alpha * scale)) return PivotKind::Boundary;
  return alpha > 0 ? PivotKind::Positive : PivotKind::Negative;
}

SoscVerdict boundary(std::size_t step, double alpha) {
  return SoscVerdict::make_error(ErrorReason::SemiDefiniteBoundary,
                                 "pivot " + std::to_string(step) + " is zero to tolerance (" + std::to_string(alpha) +
                                     ")",
                                 step);
}

SoscVerdict certify_cholesky_failure(const linalg::HessianOperator& H, const CholeskyTrace& trace,
                                     const Eigen::MatrixXd& W, std::size_t step) {
  Eigen::VectorXd d = cholesky_negative_direction(trace, W, step);
  const double curvature = d.dot(H.apply(d));
  if (!(curvature < 0)) {
    return SoscVerdict::make_error(ErrorReason::VerificationFailed,
                                   "back-substituted direction has d'Hd = " + std::to_string(curvature) +
                                       " against pivot " + std::to_string(trace.alphas.back()),
                                   step);
  }
  SoscVerdict v;
  v.status = Status::Fails;
  v.direction = std::move(d);
  v.curvature = curvature;
  v.step = step;
  return v;
}

}  // namespace

Eigen::VectorXd cholesky_negative_direction(const CholeskyTrace& trace, const Eigen::MatrixXd& W,
                                            std::size_t failed_step) {
  const auto n = static_cast<Eigen::Index>(failed_step);
  if (n < 1 || n > W.cols() || trace.alphas.size() < failed_step) {
    throw Error(ErrorCode::InvalidArgument, "failed step outside the recorded trace");
  }
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  s(n - 1) = 1.0;
  for (Eigen::Index m = n - 2; m >= 0; --m) {
    double acc = 0.0;
    for (Eigen::Index k = m + 1; k < n; ++k) acc += s(k) * trace.inner_products(m, k);
    s(m) = -acc / trace.alphas[static_cast<std::size_t>(m)];
  }
  return W.leftCols(n) * s;
}

SoscVerdict implicit_cholesky(const linalg::HessianOperator& H, const linalg::NullSpaceBasis& basis,
                              const CurvatureOptions& options, CholeskyTrace* trace_out) {
  const Eigen::MatrixXd& W = basis.W;
  if (W.rows() != H.dimension()) throw Error(ErrorCode::DimensionMismatch, "basis rows differ from operator size");
  const Eigen::Index L = W.cols();

  CholeskyTrace local;
  CholeskyTrace& trace = trace_out ? *trace_out : local;
  trace.alphas.clear();
  trace.alphas.reserve(static_cast<std::size_t>(L));
  trace.inner_products = Eigen::MatrixXd::Zero(L, L);

  Eigen::MatrixXd V = H.apply_block(W);

  for (Eigen::Index n = 0; n < L; ++n) {
    if (options.variant == Variant::Classical) {
      for (Eigen::Index m = 0; m < n; ++m) {
        const double ip = V.col(m).dot(W.col(n));
        trace.inner_products(m, n) = ip;
        V.col(n) -= (ip / trace.alphas[static_cast<std::size_t>(m)]) * V.col(m);
      }
    }
    const double alpha = W.col(n).dot(V.col(n));
    trace.alphas.push_back(alpha);
    const auto step = static_cast<std::size_t>(n + 1);
    switch (classify(alpha, W.col(n).norm() * V.col(n).norm(), options.tol_alpha)) {
      case PivotKind::Boundary: return boundary(step, alpha);
      case PivotKind::Negative: return certify_cholesky_failure(H, trace, W, step);
      case PivotKind::Positive: break;
    }
    if (options.variant == Variant::Modified && n + 1 < L) {
      const Eigen::Index rest = L - n - 1;
      const Eigen::RowVectorXd ips = V.col(n).transpose() * W.rightCols(rest);
      trace.inner_products.row(n).tail(rest) = ips;
      V.rightCols(rest).noalias() -= V.col(n) * (ips / alpha);
    }
  }
  return SoscVerdict::make_holds();
}

}  // namespace curvcheck::sosc
