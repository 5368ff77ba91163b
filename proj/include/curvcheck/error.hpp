#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvcheck {

enum class ErrorCode {
  DimensionMismatch,
  ZeroDirection,
  RankDeficient,
  DependentColumn,
  SingularMinor,
  DegenerateR,
  CannotNormalize,
  CoincidentPoints,
  MaxIterations,
  EvaluationFailure,
  InvalidArgument,
  Schema,
};

std::string_view to_string(ErrorCode code);

/// Thrown when a precondition of a numerical routine is violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curvcheck
