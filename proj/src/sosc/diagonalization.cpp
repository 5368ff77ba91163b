#include <cmath>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/sosc/methods.hpp"

namespace curvcheck::sosc {

SoscVerdict diagonalization(const linalg::HessianOperator& H, const linalg::NullSpaceBasis& basis,
                            const CurvatureOptions& options) {
  if (basis.W.rows() != H.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "basis rows differ from operator size");
  }
  const Eigen::Index L = basis.W.cols();
  Eigen::MatrixXd V = basis.W;
  Eigen::MatrixXd Z;  // H v_m, kept only by the classical variant
  Eigen::VectorXd alphas(L);
  if (options.variant == Variant::Classical) Z.resize(V.rows(), L);

  for (Eigen::Index n = 0; n < L; ++n) {
    if (options.variant == Variant::Classical) {
      for (Eigen::Index m = 0; m < n; ++m) {
        V.col(n) -= (Z.col(m).dot(V.col(n)) / alphas(m)) * V.col(m);
      }
    }
    Eigen::VectorXd z = H.apply(V.col(n));
    const double alpha = V.col(n).dot(z);
    alphas(n) = alpha;
    const auto step = static_cast<std::size_t>(n + 1);

    if (!(std::abs(alpha) > options.tol_alpha * V.col(n).norm() * z.norm())) {
      return SoscVerdict::make_error(ErrorReason::SemiDefiniteBoundary,
                                     "conjugate vector " + std::to_string(step) + " has zero curvature to tolerance",
                                     step);
    }
    if (alpha < 0) {
      SoscVerdict v;
      v.status = Status::Fails;
      v.direction = V.col(n);
      v.curvature = alpha;
      v.step = step;
      return v;
    }

    if (options.variant == Variant::Classical) {
      Z.col(n) = std::move(z);
    } else if (n + 1 < L) {
      const Eigen::Index rest = L - n - 1;
      const Eigen::RowVectorXd coeffs = (z.transpose() * V.rightCols(rest)) / alpha;
      V.rightCols(rest).noalias() -= V.col(n) * coeffs;
    }
  }
  return SoscVerdict::make_holds();
}

}  // namespace curvcheck::sosc
