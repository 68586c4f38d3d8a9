#include "thermocap/errors.hpp"

#include <utility>

namespace thermocap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveConstant: return "NonPositiveConstant";
    case ErrorKind::IndefiniteGradientForm: return "IndefiniteGradientForm";
    case ErrorKind::NegativeTemperatureGap: return "NegativeTemperatureGap";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::CriticalIsotherm: return "CriticalIsotherm";
    case ErrorKind::UndecayedTail: return "UndecayedTail";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonPositiveData: return "NonPositiveData";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::InvalidSweep: return "InvalidSweep";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParameterError::ParameterError(ErrorKind kind, std::string field, const std::string& message)
    : Error(kind, message), field_(std::move(field)) {}

bool is_solver_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CriticalIsotherm:
    case ErrorKind::UndecayedTail:
    case ErrorKind::NewtonDiverged:
    case ErrorKind::MaxIterations:
    case ErrorKind::RootNotBracketed:
    case ErrorKind::RankDeficient:
      return true;
    default:
      return false;
  }
}

}  // namespace thermocap
