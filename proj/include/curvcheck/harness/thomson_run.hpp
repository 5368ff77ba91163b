#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "curvcheck/harness/records.hpp"
#include "curvcheck/stationary/fonc.hpp"

namespace curvcheck::harness {

struct ThomsonConfig {
  std::vector<int> k_list{2, 3, 4};
  std::vector<sosc::Method> methods{std::begin(sosc::kAllMethods), std::end(sosc::kAllMethods)};
  double fd_sigma = 0.0;  // <= 0: default step
  std::uint64_t seed = 1;
  stationary::ThomsonSolveOptions solve;
  sosc::VerifyOptions options;
};

/// Solves each Thomson instance, then verifies the SOSC at the computed point
/// with every method on a finite-difference operator. A failed solve yields
/// one record per method carrying the solver error.
void run_thomson(const ThomsonConfig& config, const std::function<void(const ThomsonRecord&)>& sink);

}  // namespace curvcheck::harness
