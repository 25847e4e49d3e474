#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcodes {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  NotCoprime,
  DivideByZero,
  DivideByZeroPoly,
  BothZero,
  ZeroPoly,
  ConstantPoly,
  NotCoprimeToCharacteristic,
  NotIrreducible,
  NotMonic,
  NotSquare,
  SizeMismatch,
  NotCyclic,
  NotADivisor,
  NotAnMCode,
  ZeroCode,
  TooLarge,
  Singular,
  DecompositionMismatch,
  HypothesisFailed,
  PreconditionDegree,
  EvenN,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcodes
