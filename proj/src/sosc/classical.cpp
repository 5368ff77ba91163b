#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/bordered_lu.hpp"
#include "curvcheck/linalg/ldl.hpp"
#include "curvcheck/problems/kkt.hpp"
#include "curvcheck/sosc/methods.hpp"

namespace curvcheck::sosc {

SoscVerdict bordered_hessian_test(const Eigen::MatrixXd& H, const linalg::ConstraintJacobian& jac, double tol_pivot,
                                  std::vector<int>* minor_signs) {
  const Eigen::Index M = jac.constraints();
  const Eigen::Index N = jac.variables();
  const Eigen::Index L = N - M;
  const Eigen::MatrixXd B = problems::build_bordered(H, jac.matrix());
  const int expected = (M % 2 == 0) ? 1 : -1;
  if (minor_signs) minor_signs->clear();

  SoscVerdict verdict;
  std::size_t minors = 0;
  auto finish = [&](SoscVerdict v) {
    v.diagnostics.minors = minors;
    return v;
  };

  std::optional<linalg::BorderedLu> lu;
  for (Eigen::Index i = 1; i <= L; ++i) {
    const Eigen::Index size = 2 * M + i;
    int sign = 0;
    try {
      if (!lu) {
        lu = linalg::BorderedLu::factor(B.topLeftCorner(size, size), N + M, tol_pivot);
        sign = lu->determinant_sign();
      } else {
        sign = lu->update(B.col(size - 1).head(size - 1), B(size - 1, size - 1));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMinor) throw;
      return finish(SoscVerdict::make_error(ErrorReason::SingularMinor,
                                            "leading minor of order " + std::to_string(size) + " is singular",
                                            static_cast<std::size_t>(i)));
    }
    ++minors;
    if (minor_signs) minor_signs->push_back(sign);
    if (sign != expected) {
      SoscVerdict v;
      v.status = Status::Fails;
      v.step = static_cast<std::size_t>(i);
      v.message = "minor of order " + std::to_string(size) + " has sign " + std::to_string(sign);
      return finish(std::move(v));
    }
  }
  return finish(SoscVerdict::make_holds());
}

SoscVerdict inertia_test(const Eigen::MatrixXd& H, const linalg::ConstraintJacobian& jac) {
  const Eigen::Index M = jac.constraints();
  const Eigen::Index N = jac.variables();
  const auto ldl = linalg::ldl_factor(problems::build_kkt(H, jac.matrix()));
  const linalg::Inertia expected{N, M, 0};

  SoscVerdict v;
  v.status = ldl.inertia == expected ? Status::Holds : Status::Fails;
  v.diagnostics.inertia = ldl.inertia;
  return v;
}

}  // namespace curvcheck::sosc
