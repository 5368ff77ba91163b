#include "curvcheck/harness/compare.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include "curvcheck/error.hpp"
#include "curvcheck/harness/records.hpp"
#include "curvcheck/problems/kkt.hpp"

namespace curvcheck::harness {

CompareReport compare_methods(const sosc::Problem& problem, const sosc::VerifyOptions& options,
                              Eigen::Index oracle_limit) {
  CompareReport report;
  for (const auto m : sosc::kAllMethods) report.verdicts.emplace_back(m, sosc::verify(problem, m, options));

  const bool first = report.verdicts.front().second.holds();
  for (const auto& [m, v] : report.verdicts) report.disagreement |= v.holds() != first;

  if (problem.variables() <= oracle_limit) {
    const Eigen::MatrixXd H = problem.H.materialize();
    try {
      const Eigen::MatrixXd W = problem.exact_basis
                                    ? *problem.exact_basis
                                    : linalg::null_space_basis(problem.A, linalg::BasisMethod::SvdOfA, options.tol_rank).W;
      const Eigen::MatrixXd reduced = W.transpose() * H * W;
      report.oracle_lambda_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(reduced, Eigen::EigenvaluesOnly)
                                     .eigenvalues()
                                     .minCoeff();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient) throw;
    }
    const Eigen::MatrixXd K = problems::build_kkt(H, problem.A.matrix());
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(K, Eigen::EigenvaluesOnly).eigenvalues();
    report.kkt_min_abs_eig = eig.cwiseAbs().minCoeff();
    const double threshold = std::sqrt(std::numeric_limits<double>::epsilon()) * eig.cwiseAbs().maxCoeff();
    report.near_singular_kkt = *report.kkt_min_abs_eig <= threshold;
  }
  return report;
}

void print_report(std::ostream& out, const sosc::Problem& problem, const CompareReport& report) {
  out << "N = " << problem.variables() << ", M = " << problem.constraints() << ", L = " << problem.free_dimension();
  if (problem.truth) out << ", truth = " << (*problem.truth ? "Holds" : "Fails");
  out << '\n';
  out << std::left << std::setw(10) << "method" << std::setw(28) << "verdict" << std::setw(8) << "step"
      << std::setw(10) << "products" << "detail\n";
  for (const auto& [m, v] : report.verdicts) {
    out << std::setw(10) << sosc::to_string(m) << std::setw(28) << verdict_label(v.status, v.reason) << std::setw(8)
        << (v.step ? std::to_string(*v.step) : "-") << std::setw(10) << v.diagnostics.operator_products;
    if (v.curvature) out << "d'Hd = " << format_double(*v.curvature);
    if (v.diagnostics.inertia) out << "inertia " << *v.diagnostics.inertia;
    out << '\n';
  }
  if (report.oracle_lambda_min) {
    out << std::setw(10) << "oracle" << std::setw(28) << (*report.oracle_lambda_min > 0 ? "Holds" : "Fails")
        << "lambda_min(W'HW) = " << format_double(*report.oracle_lambda_min) << '\n';
  }
  if (report.kkt_min_abs_eig) out << "min |eig(K)| = " << format_double(*report.kkt_min_abs_eig) << '\n';
  if (report.near_singular_kkt) out << "near-singular KKT: verdicts may disagree through round-off\n";
  if (report.disagreement) out << "methods disagree\n";
}

}  // namespace curvcheck::harness
