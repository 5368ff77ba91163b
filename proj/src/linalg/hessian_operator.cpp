#include "curvcheck/linalg/hessian_operator.hpp"

#include <string>

#include "curvcheck/error.hpp"

namespace curvcheck::linalg {

namespace {

void require_dimension(Eigen::Index n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "operator dimension must be at least 2");
}

}  // namespace

HessianOperator::HessianOperator(Eigen::Index n, Backing backing)
    : n_(n), backing_(std::move(backing)), counter_(std::make_unique<std::atomic<std::size_t>>(0)) {}

HessianOperator::HessianOperator(const HessianOperator& other)
    : n_(other.n_),
      backing_(other.backing_),
      counter_(std::make_unique<std::atomic<std::size_t>>(other.product_count())) {}

HessianOperator& HessianOperator::operator=(const HessianOperator& other) {
  if (this != &other) {
    n_ = other.n_;
    backing_ = other.backing_;
    counter_ = std::make_unique<std::atomic<std::size_t>>(other.product_count());
  }
  return *this;
}

HessianOperator HessianOperator::dense(const Matrix& H) {
  if (H.rows() != H.cols()) throw Error(ErrorCode::DimensionMismatch, "Hessian must be square");
  require_dimension(H.rows());
  Matrix sym = 0.5 * (H + H.transpose());
  return HessianOperator(H.rows(), Dense{std::move(sym)});
}

HessianOperator HessianOperator::callback(Eigen::Index n, ProductFn product) {
  require_dimension(n);
  if (!product) throw Error(ErrorCode::InvalidArgument, "empty product callback");
  return HessianOperator(n, Callback{std::move(product)});
}

HessianOperator HessianOperator::finite_difference(GradientFn gradient, const Vector& x, double sigma) {
  require_dimension(x.size());
  if (!gradient) throw Error(ErrorCode::InvalidArgument, "empty gradient callback");
  if (sigma <= 0.0) sigma = 1e-6 * (1.0 + x.lpNorm<Eigen::Infinity>());
  Vector g0 = gradient(x);
  if (g0.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "gradient callback size");
  return HessianOperator(x.size(), FiniteDifference{std::move(gradient), x, sigma, std::move(g0)});
}

const Matrix* HessianOperator::dense_matrix() const noexcept {
  if (const auto* d = std::get_if<Dense>(&backing_)) return &d->H;
  return nullptr;
}

double HessianOperator::fd_step() const noexcept {
  if (const auto* fd = std::get_if<FiniteDifference>(&backing_)) return fd->step;
  return 0.0;
}

Vector HessianOperator::apply_uncounted(const Vector& s) const {
  if (s.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected vector of size " + std::to_string(n_) + ", got " + std::to_string(s.size()));
  }
  return std::visit(
      [&](const auto& b) -> Vector {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Dense>) {
          return b.H * s;
        } else if constexpr (std::is_same_v<T, Callback>) {
          Vector out = b.product(s);
          if (out.size() != n_) throw Error(ErrorCode::DimensionMismatch, "product callback size");
          return out;
        } else {
          const double norm = s.norm();
          if (norm == 0.0) throw Error(ErrorCode::ZeroDirection, "finite difference along s = 0");
          // H (s/|s|) ~ (grad(x + h s/|s|) - grad(x)) / h, rescaled by |s|.
          const Vector shifted = b.x + (b.step / norm) * s;
          Vector g = b.gradient(shifted);
          if (g.size() != n_) throw Error(ErrorCode::DimensionMismatch, "gradient callback size");
          return (norm / b.step) * (g - b.base_gradient);
        }
      },
      backing_);
}

Vector HessianOperator::apply(const Vector& s) const {
  Vector out = apply_uncounted(s);
  counter_->fetch_add(1, std::memory_order_relaxed);
  return out;
}

Matrix HessianOperator::apply_block(const Matrix& S) const {
  if (S.rows() != n_) throw Error(ErrorCode::DimensionMismatch, "block apply row count");
  Matrix out(n_, S.cols());
  if (const auto* d = std::get_if<Dense>(&backing_)) {
    out.noalias() = d->H * S;
  } else {
    for (Eigen::Index j = 0; j < S.cols(); ++j) out.col(j) = apply_uncounted(S.col(j));
  }
  counter_->fetch_add(static_cast<std::size_t>(S.cols()), std::memory_order_relaxed);
  return out;
}

Matrix HessianOperator::materialize() const {
  if (const auto* d = std::get_if<Dense>(&backing_)) return d->H;
  Matrix H = apply_block(Matrix::Identity(n_, n_));
  return 0.5 * (H + H.transpose());
}

}  // namespace curvcheck::linalg
