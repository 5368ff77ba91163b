#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "curvcheck/linalg/hessian_operator.hpp"
#include "curvcheck/linalg/null_space.hpp"
#include "curvcheck/sosc/methods.hpp"
#include "curvcheck/sosc/verdict.hpp"

namespace curvcheck::sosc {

/// A first-order point to be tested: the constraint Jacobian and the Hessian
/// of the Lagrangian there, with whatever else is known about it.
struct Problem {
  linalg::ConstraintJacobian A;
  linalg::HessianOperator H;
  std::optional<Eigen::VectorXd> x;
  std::optional<Eigen::VectorXd> lambda;
  std::optional<bool> truth;                   // SOSC known to hold (true) or fail (false)
  std::optional<Eigen::MatrixXd> exact_basis;  // exact null-space basis, when the generator knows one
  nlohmann::json provenance = nlohmann::json::object();

  Problem(linalg::ConstraintJacobian jac, linalg::HessianOperator hess);

  Eigen::Index variables() const noexcept { return A.variables(); }
  Eigen::Index constraints() const noexcept { return A.constraints(); }
  Eigen::Index free_dimension() const noexcept { return A.free_dimension(); }
};

enum class Method { Cholesky, Diagonalization, Pcg, BorderedHessian, Inertia };

inline constexpr Method kAllMethods[] = {Method::Cholesky, Method::Diagonalization, Method::Pcg,
                                         Method::BorderedHessian, Method::Inertia};

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view name);
bool is_hessian_free(Method m) noexcept;

struct VerifyOptions {
  Variant variant = Variant::Modified;
  linalg::BasisMethod basis = linalg::BasisMethod::QrOfAT;
  bool use_exact_basis = false;  // use Problem::exact_basis when present
  double tol_alpha = 0.0;
  std::optional<double> tol_rank;  // default sqrt(eps) * ||A||_F
  double tol_feas = 1e-8;          // ||A d||_inf <= tol_feas * ||d|| * ||A||_F
  double pcg_tol = 1e-10;
  std::uint64_t seed = 0;
  std::optional<Eigen::VectorXd> pcg_start;
  double tol_pivot = 0.0;
};

/// Runs one test on `problem`. The problem's operator is not touched: the
/// product count in the diagnostics refers to this call only. Hessian-free
/// methods check LICQ first and return Error(RankDeficient) when it fails;
/// BHT and the inertia test materialize H (N products for operator-only
/// problems).
SoscVerdict verify(const Problem& problem, Method method, const VerifyOptions& options = {});

/// ||A d||_inf <= tol * ||d|| * ||A||_F.
bool is_feasible_direction(const Eigen::MatrixXd& A, const Eigen::VectorXd& d, double tol);

}  // namespace curvcheck::sosc
