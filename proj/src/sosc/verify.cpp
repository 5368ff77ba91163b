#include "curvcheck/sosc/verify.hpp"

#include <chrono>
#include <string>

#include "curvcheck/error.hpp"
#include "curvcheck/linalg/projector.hpp"

namespace curvcheck::sosc {

Problem::Problem(linalg::ConstraintJacobian jac, linalg::HessianOperator hess) : A(std::move(jac)), H(std::move(hess)) {
  if (H.dimension() != A.variables()) {
    throw Error(ErrorCode::DimensionMismatch, "Hessian is " + std::to_string(H.dimension()) + " but A has " +
                                                  std::to_string(A.variables()) + " columns");
  }
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Cholesky: return "cholesky";
    case Method::Diagonalization: return "diag";
    case Method::Pcg: return "pcg";
    case Method::BorderedHessian: return "bht";
    case Method::Inertia: return "inertia";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) {
  if (name == "cholesky" || name == "chol") return Method::Cholesky;
  if (name == "diag" || name == "diagonalization") return Method::Diagonalization;
  if (name == "pcg") return Method::Pcg;
  if (name == "bht" || name == "bordered") return Method::BorderedHessian;
  if (name == "inertia" || name == "ldl") return Method::Inertia;
  return std::nullopt;
}

bool is_hessian_free(Method m) noexcept {
  return m == Method::Cholesky || m == Method::Diagonalization || m == Method::Pcg;
}

bool is_feasible_direction(const Eigen::MatrixXd& A, const Eigen::VectorXd& d, double tol) {
  return (A * d).lpNorm<Eigen::Infinity>() <= tol * d.norm() * A.norm();
}

namespace {

linalg::NullSpaceBasis basis_for(const Problem& p, const VerifyOptions& o) {
  if (o.use_exact_basis && p.exact_basis) {
    return {*p.exact_basis, o.basis, false};
  }
  return linalg::null_space_basis(p.A, o.basis, o.tol_rank);
}

SoscVerdict dispatch(const Problem& p, const linalg::HessianOperator& H, Method method, const VerifyOptions& o) {
  const CurvatureOptions curv{o.variant, o.tol_alpha};
  switch (method) {
    case Method::Cholesky: return implicit_cholesky(H, basis_for(p, o), curv);
    case Method::Diagonalization: return diagonalization(H, basis_for(p, o), curv);
    case Method::Pcg: {
      PcgOptions pcg;
      pcg.tol = o.pcg_tol;
      pcg.tol_alpha = o.tol_alpha;
      pcg.seed = o.seed;
      pcg.start = o.pcg_start;
      return continued_pcg(H, linalg::Projector(p.A.matrix(), o.tol_rank), pcg);
    }
    case Method::BorderedHessian: return bordered_hessian_test(H.materialize(), p.A, o.tol_pivot);
    case Method::Inertia: return inertia_test(H.materialize(), p.A);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace

SoscVerdict verify(const Problem& problem, Method method, const VerifyOptions& options) {
  // A private copy keeps the product count per call, even when several
  // threads verify the same problem.
  const linalg::HessianOperator H = problem.H;
  H.reset_count();

  const auto start = std::chrono::steady_clock::now();
  SoscVerdict verdict;
  try {
    verdict = dispatch(problem, H, method, options);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::RankDeficient: verdict = SoscVerdict::make_error(ErrorReason::RankDeficient, e.what()); break;
      case ErrorCode::SingularMinor: verdict = SoscVerdict::make_error(ErrorReason::SingularMinor, e.what()); break;
      case ErrorCode::DimensionMismatch:
      case ErrorCode::InvalidArgument:
        verdict = SoscVerdict::make_error(ErrorReason::InvalidInput, e.what());
        break;
      default: throw;
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  if (verdict.fails() && verdict.direction &&
      !is_feasible_direction(problem.A.matrix(), *verdict.direction, options.tol_feas)) {
    auto step = verdict.step;
    verdict = SoscVerdict::make_error(ErrorReason::VerificationFailed,
                                      "negative-curvature direction is not feasible to tolerance", step);
  }
  verdict.diagnostics.operator_products = H.product_count();
  verdict.diagnostics.wall_time_s = std::chrono::duration<double>(stop - start).count();
  return verdict;
}

}  // namespace curvcheck::sosc
