#include "curvcheck/linalg/bordered_lu.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "curvcheck/error.hpp"

namespace curvcheck::linalg {

void BorderedLu::ensure_capacity(Eigen::Index n) {
  if (L_.rows() >= n) return;
  const Eigen::Index cap = std::max(n, 2 * L_.rows());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(cap, cap);
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(cap, cap);
  L.topLeftCorner(n_, n_) = L_.topLeftCorner(n_, n_);
  U.topLeftCorner(n_, n_) = U_.topLeftCorner(n_, n_);
  L_.swap(L);
  U_.swap(U);
}

BorderedLu BorderedLu::factor(const Eigen::MatrixXd& B, Eigen::Index capacity, double tol_pivot) {
  if (B.rows() != B.cols() || B.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "LU needs a square matrix");
  const Eigen::Index n = B.rows();
  BorderedLu lu;
  lu.tol_pivot_ = tol_pivot;
  lu.scale_ = B.cwiseAbs().maxCoeff();
  lu.ensure_capacity(std::max(n, capacity));

  Eigen::MatrixXd work = B;
  lu.perm_.resize(static_cast<std::size_t>(n));
  std::iota(lu.perm_.begin(), lu.perm_.end(), Eigen::Index{0});

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p;
    const double pivot_mag = work.col(k).tail(n - k).cwiseAbs().maxCoeff(&p);
    p += k;
    if (!(pivot_mag > tol_pivot * lu.scale_)) {
      throw Error(ErrorCode::SingularMinor, "zero pivot in column " + std::to_string(k));
    }
    if (p != k) {
      work.row(k).swap(work.row(p));
      std::swap(lu.perm_[static_cast<std::size_t>(k)], lu.perm_[static_cast<std::size_t>(p)]);
      lu.sign_ = -lu.sign_;
    }
    const double pivot = work(k, k);
    if (pivot < 0) lu.sign_ = -lu.sign_;
    const Eigen::Index rest = n - k - 1;
    if (rest > 0) {
      work.col(k).tail(rest) /= pivot;
      work.bottomRightCorner(rest, rest).noalias() -= work.col(k).tail(rest) * work.row(k).tail(rest);
    }
  }
  lu.n_ = n;
  lu.L_.topLeftCorner(n, n) = work.triangularView<Eigen::UnitLower>();
  lu.U_.topLeftCorner(n, n) = work.triangularView<Eigen::Upper>();
  return lu;
}

int BorderedLu::update(const Eigen::VectorXd& b, double gamma) {
  if (b.size() != n_) throw Error(ErrorCode::DimensionMismatch, "border vector size");

  // P_new = diag(P, 1):  L u = P b,  U^T l = b,  delta = gamma - l^T u.
  Eigen::VectorXd pb(n_);
  for (Eigen::Index i = 0; i < n_; ++i) pb(i) = b(perm_[static_cast<std::size_t>(i)]);
  const auto Lblk = L_.topLeftCorner(n_, n_);
  const auto Ublk = U_.topLeftCorner(n_, n_);
  Eigen::VectorXd u = Lblk.triangularView<Eigen::UnitLower>().solve(pb);
  Eigen::VectorXd l = Ublk.transpose().triangularView<Eigen::Lower>().solve(b);
  const double delta = gamma - l.dot(u);

  scale_ = std::max({scale_, b.size() ? b.cwiseAbs().maxCoeff() : 0.0, std::abs(gamma)});
  if (!(std::abs(delta) > tol_pivot_ * scale_) || !std::isfinite(delta)) {
    throw Error(ErrorCode::SingularMinor, "zero pivot when bordering to size " + std::to_string(n_ + 1));
  }

  ensure_capacity(n_ + 1);
  U_.col(n_).head(n_) = u;
  U_(n_, n_) = delta;
  L_.row(n_).head(n_) = l.transpose();
  L_(n_, n_) = 1.0;
  perm_.push_back(n_);
  ++n_;
  if (delta < 0) sign_ = -sign_;
  return sign_;
}

Eigen::MatrixXd BorderedLu::lower() const { return L_.topLeftCorner(n_, n_); }
Eigen::MatrixXd BorderedLu::upper() const { return U_.topLeftCorner(n_, n_); }

}  // namespace curvcheck::linalg
