#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "curvcheck/problems/generator.hpp"
#include "curvcheck/sosc/verify.hpp"

namespace curvcheck::harness {

/// One (trial, method) row of a randomized campaign.
struct TrialRecord {
  std::uint64_t seed = 0;
  Eigen::Index N = 0;
  Eigen::Index M = 0;
  Eigen::Index P = 0;
  problems::Conditioning conditioning = problems::Conditioning::WellConditioned;
  sosc::Method method = sosc::Method::Cholesky;
  sosc::Status status = sosc::Status::Error;
  sosc::ErrorReason reason = sosc::ErrorReason::None;
  std::optional<bool> truth;
  double wall_time_s = 0.0;
  std::size_t operator_products = 0;
  std::size_t continuations = 0;
  std::optional<std::size_t> fail_step;

  /// (status == Holds) == truth; an Error counts as "not verified".
  bool agree() const noexcept { return truth && ((status == sosc::Status::Holds) == *truth); }
  bool false_positive() const noexcept { return truth && !*truth && status == sosc::Status::Holds; }
  bool false_negative() const noexcept { return truth && *truth && status != sosc::Status::Holds; }
};

/// "Holds", "Fails", or "Error:<reason>".
std::string verdict_label(sosc::Status status, sosc::ErrorReason reason);

/// Exactly the TrialRecord field names.
inline constexpr const char* kTrialCsvHeader =
    "seed,N,M,P,conditioning,method,verdict,truth,agree,wall_time_s,operator_products,continuations,fail_step";

void write_csv_row(std::ostream& out, const TrialRecord& r);

/// Decimal with 17 significant digits and '.' as separator.
std::string format_double(double v);

struct ThomsonRecord {
  int K = 0;
  Eigen::Index N = 0;
  Eigen::Index M = 0;
  sosc::Method method = sosc::Method::Cholesky;
  sosc::Status status = sosc::Status::Error;
  sosc::ErrorReason reason = sosc::ErrorReason::None;
  double energy = 0.0;
  double fonc_residual = 0.0;
  double wall_time_s = 0.0;
  std::size_t operator_products = 0;
  std::size_t continuations = 0;
  std::optional<std::size_t> fail_step;
  std::string solver_error;  // nonempty when the first-order solve failed
};

inline constexpr const char* kThomsonCsvHeader =
    "K,N,M,method,verdict,energy,fonc_residual,wall_time_s,operator_products,continuations,fail_step,solver_error";

void write_csv_row(std::ostream& out, const ThomsonRecord& r);

}  // namespace curvcheck::harness
