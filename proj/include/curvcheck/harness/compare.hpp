#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::harness {

struct CompareReport {
  std::vector<std::pair<sosc::Method, sosc::SoscVerdict>> verdicts;
  /// Smallest eigenvalue of the reduced Hessian W^T H W on an orthonormal
  /// (or the exact) basis; present when N <= oracle_limit.
  std::optional<double> oracle_lambda_min;
  std::optional<double> kkt_min_abs_eig;
  bool near_singular_kkt = false;
  bool disagreement = false;  // methods returned different Holds/not-Holds answers
};

/// Runs all five methods. The eigen-oracle and the KKT conditioning check
/// need H explicitly, so they are skipped above `oracle_limit` variables.
CompareReport compare_methods(const sosc::Problem& problem, const sosc::VerifyOptions& options = {},
                              Eigen::Index oracle_limit = 500);

void print_report(std::ostream& out, const sosc::Problem& problem, const CompareReport& report);

}  // namespace curvcheck::harness
