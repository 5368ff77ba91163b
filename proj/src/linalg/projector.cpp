#include "curvcheck/linalg/projector.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/null_space.hpp"

namespace curvcheck::linalg {

Projector::Projector(const Eigen::MatrixXd& A, std::optional<double> tol_rank)
    : constraints_(A.rows()), relative_rank_tol_(std::sqrt(std::numeric_limits<double>::epsilon())) {
  if (A.rows() >= A.cols() && A.rows() > 0) {
    throw Error(ErrorCode::InvalidArgument, "projector needs M < N");
  }
  if (A.rows() == 0) {
    qr_ = HouseholderQr::empty(A.cols());
    return;
  }
  qr_ = HouseholderQr(A.transpose());
  const double tol = tol_rank.value_or(default_rank_tolerance(A));
  for (Eigen::Index j = 0; j < A.rows(); ++j) {
    if (!(std::abs(qr_.r_diag(j)) > tol)) {
      throw Error(ErrorCode::RankDeficient, "constraint gradient " + std::to_string(j) +
                                                " is dependent on the preceding ones (|r_jj| = " +
                                                std::to_string(std::abs(qr_.r_diag(j))) + ")");
    }
  }
}

Eigen::VectorXd Projector::project(const Eigen::VectorXd& r) const {
  if (r.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "projector input size");
  Eigen::VectorXd y = r;
  qr_.apply_qt(y);
  y.head(qr_.cols()).setZero();
  qr_.apply_q(y);
  return y;
}

void Projector::append_column(const Eigen::VectorXd& q) {
  if (q.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "appended column size");
  if (!qr_.append_column(q, relative_rank_tol_)) {
    throw Error(ErrorCode::DependentColumn, "appended column lies in the span of the current columns");
  }
}

Projector Projector::with_column(const Eigen::VectorXd& q) const {
  Projector copy = *this;
  copy.append_column(q);
  return copy;
}

}  // namespace curvcheck::linalg
