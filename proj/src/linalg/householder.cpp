#include "curvcheck/linalg/householder.hpp"

#include <cmath>

namespace curvcheck::linalg {

HouseholderQr::HouseholderQr(const Eigen::MatrixXd& A)
    : rows_(A.rows()), cols_(A.cols()), packed_(A), tau_(Eigen::VectorXd::Zero(std::min(A.rows(), A.cols()))) {
  const Eigen::Index k = reflectors();
  for (Eigen::Index j = 0; j < k; ++j) {
    reflect_column(j);
    // Apply the new reflector to the trailing columns.
    for (Eigen::Index c = j + 1; c < cols_; ++c) apply_reflector(j, packed_.col(c));
  }
}

HouseholderQr HouseholderQr::empty(Eigen::Index rows) {
  HouseholderQr qr;
  qr.rows_ = rows;
  qr.cols_ = 0;
  qr.packed_.resize(rows, 0);
  qr.tau_.resize(0);
  return qr;
}

// Generates the reflector that annihilates packed_(j+1:, j), LAPACK dlarfg style.
void HouseholderQr::reflect_column(Eigen::Index j) {
  const Eigen::Index tail = rows_ - j - 1;
  const double alpha = packed_(j, j);
  const double xnorm = tail > 0 ? packed_.col(j).tail(tail).norm() : 0.0;
  if (xnorm == 0.0) {
    tau_(j) = 0.0;
    return;
  }
  const double beta = -std::copysign(std::hypot(alpha, xnorm), alpha);
  tau_(j) = (beta - alpha) / beta;
  packed_.col(j).tail(tail) /= (alpha - beta);
  packed_(j, j) = beta;
}

void HouseholderQr::apply_reflector(Eigen::Index j, Eigen::Ref<Eigen::VectorXd> y) const {
  const double t = tau_(j);
  if (t == 0.0) return;
  const Eigen::Index tail = rows_ - j - 1;
  double w = y(j);
  if (tail > 0) w += packed_.col(j).tail(tail).dot(y.tail(tail));
  w *= t;
  y(j) -= w;
  if (tail > 0) y.tail(tail) -= w * packed_.col(j).tail(tail);
}

void HouseholderQr::apply_qt(Eigen::Ref<Eigen::VectorXd> y) const {
  const Eigen::Index k = reflectors();
  for (Eigen::Index j = 0; j < k; ++j) apply_reflector(j, y);
}

void HouseholderQr::apply_q(Eigen::Ref<Eigen::VectorXd> y) const {
  for (Eigen::Index j = reflectors() - 1; j >= 0; --j) apply_reflector(j, y);
}

bool HouseholderQr::append_column(const Eigen::VectorXd& q, double tol) {
  if (cols_ >= rows_) return false;
  Eigen::VectorXd y = q;
  apply_qt(y);
  const double residual = y.tail(rows_ - cols_).norm();
  if (!(residual > tol * q.norm())) return false;

  if (packed_.cols() == cols_) {
    packed_.conservativeResize(Eigen::NoChange, cols_ + 1);
    tau_.conservativeResize(cols_ + 1);
  }
  packed_.col(cols_) = y;
  ++cols_;
  reflect_column(cols_ - 1);
  return true;
}

Eigen::MatrixXd HouseholderQr::q_columns(Eigen::Index first, Eigen::Index count) const {
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(rows_, count);
  for (Eigen::Index c = 0; c < count; ++c) {
    Q(first + c, c) = 1.0;
    apply_q(Q.col(c));
  }
  return Q;
}

Eigen::MatrixXd HouseholderQr::r() const {
  const Eigen::Index k = reflectors();
  Eigen::MatrixXd R = packed_.topLeftCorner(k, cols_).triangularView<Eigen::Upper>();
  return R;
}

}  // namespace curvcheck::linalg
