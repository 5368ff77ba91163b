#include "curvcheck/sosc/verdict.hpp"

namespace curvcheck::sosc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Error: return "Error";
  }
  return "Unknown";
}

std::string_view to_string(ErrorReason r) {
  switch (r) {
    case ErrorReason::None: return "None";
    case ErrorReason::SemiDefiniteBoundary: return "SemiDefiniteBoundary";
    case ErrorReason::SingularMinor: return "SingularMinor";
    case ErrorReason::VerificationFailed: return "VerificationFailed";
    case ErrorReason::SubspaceExhausted: return "SubspaceExhausted";
    case ErrorReason::RankDeficient: return "RankDeficient";
    case ErrorReason::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace curvcheck::sosc
