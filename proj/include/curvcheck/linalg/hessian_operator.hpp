#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <variant>

#include <Eigen/Dense>

namespace curvcheck::linalg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Action s -> Hs of the Hessian of the Lagrangian.
///
/// Three backings are supported: an explicit symmetric matrix, an arbitrary
/// product callback, and forward differences of a Lagrangian-gradient
/// callback at a fixed point (x, lambda). Every application is counted so
/// that Hessian-free methods can be audited for their product budget.
class HessianOperator {
 public:
  using ProductFn = std::function<Vector(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;

  struct Dense {
    Matrix H;
  };
  struct Callback {
    ProductFn product;
  };
  struct FiniteDifference {
    GradientFn gradient;  // x -> grad_x L(x, lambda) at the fixed multipliers
    Vector x;
    double step = 0.0;  // absolute step taken along the unit direction
    Vector base_gradient;
  };

  /// Stores the symmetric part (H + H^T)/2.
  static HessianOperator dense(const Matrix& H);
  static HessianOperator callback(Eigen::Index n, ProductFn product);
  /// `sigma` <= 0 selects the default step 1e-6 * (1 + ||x||_inf).
  static HessianOperator finite_difference(GradientFn gradient, const Vector& x, double sigma = 0.0);

  HessianOperator(const HessianOperator& other);
  HessianOperator& operator=(const HessianOperator& other);
  HessianOperator(HessianOperator&&) noexcept = default;
  HessianOperator& operator=(HessianOperator&&) noexcept = default;

  Eigen::Index dimension() const noexcept { return n_; }

  Vector apply(const Vector& s) const;
  /// Applies H to every column of S; counts S.cols() products.
  Matrix apply_block(const Matrix& S) const;

  /// Explicit matrix: the stored one, or N applications to unit vectors
  /// (symmetrized) for operator-only backings.
  Matrix materialize() const;

  bool is_dense() const noexcept { return std::holds_alternative<Dense>(backing_); }
  const Matrix* dense_matrix() const noexcept;
  bool is_finite_difference() const noexcept {
    return std::holds_alternative<FiniteDifference>(backing_);
  }
  double fd_step() const noexcept;

  std::size_t product_count() const noexcept { return counter_->load(std::memory_order_relaxed); }
  void reset_count() const noexcept { counter_->store(0, std::memory_order_relaxed); }

 private:
  using Backing = std::variant<Dense, Callback, FiniteDifference>;
  HessianOperator(Eigen::Index n, Backing backing);

  Vector apply_uncounted(const Vector& s) const;

  Eigen::Index n_ = 0;
  Backing backing_;
  std::unique_ptr<std::atomic<std::size_t>> counter_;
};

}  // namespace curvcheck::linalg
