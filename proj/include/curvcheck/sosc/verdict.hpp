#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "curvcheck/linalg/ldl.hpp"

namespace curvcheck::sosc {

enum class Status { Holds, Fails, Error };

/// Why a verdict is Error: the SOSC was neither verified nor refuted.
enum class ErrorReason {
  None,
  SemiDefiniteBoundary,  // a pivot/curvature was zero to tolerance
  SingularMinor,         // BHT leading minor (numerically) singular
  VerificationFailed,    // negative-curvature certificate did not re-verify
  SubspaceExhausted,     // PCG could not draw a restart vector
  RankDeficient,         // constraint gradients dependent (LICQ)
  InvalidInput,
};

std::string_view to_string(Status s);
std::string_view to_string(ErrorReason r);

struct Diagnostics {
  std::size_t operator_products = 0;
  std::size_t continuations = 0;  // PCG restarts
  std::size_t minors = 0;         // BHT minors computed
  std::optional<linalg::Inertia> inertia;
  double wall_time_s = 0.0;
};

struct SoscVerdict {
  Status status = Status::Error;
  ErrorReason reason = ErrorReason::None;
  std::optional<Eigen::VectorXd> direction;  // feasible d with d^T H d < 0
  std::optional<double> curvature;           // d^T H d
  std::optional<std::size_t> step;           // 1-based step at which the test stopped
  std::string message;
  Diagnostics diagnostics;

  bool holds() const noexcept { return status == Status::Holds; }
  bool fails() const noexcept { return status == Status::Fails; }

  static SoscVerdict make_holds() {
    SoscVerdict v;
    v.status = Status::Holds;
    return v;
  }
  static SoscVerdict make_error(ErrorReason reason, std::string message, std::optional<std::size_t> step = {}) {
    SoscVerdict v;
    v.status = Status::Error;
    v.reason = reason;
    v.message = std::move(message);
    v.step = step;
    return v;
  }
};

}  // namespace curvcheck::sosc
