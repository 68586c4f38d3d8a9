#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thermocap {

enum class ErrorKind {
  NonPositiveConstant,
  IndefiniteGradientForm,
  NegativeTemperatureGap,
  InvalidGrid,
  InvalidState,
  InvalidProfile,
  CriticalIsotherm,
  UndecayedTail,
  NewtonDiverged,
  MaxIterations,
  RootNotBracketed,
  RankDeficient,
  NonPositiveData,
  DegenerateSpan,
  InvalidSweep,
};

std::string_view to_string(ErrorKind kind);

// Base exception for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by parameter validation; carries the name of the offending field.
class ParameterError : public Error {
 public:
  ParameterError(ErrorKind kind, std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// True for errors that come out of a numerical solve (as opposed to bad input).
bool is_solver_failure(ErrorKind kind) noexcept;

}  // namespace thermocap
