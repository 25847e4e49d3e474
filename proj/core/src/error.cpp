#include "mcodes/error.hpp"

namespace mcodes {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::DivideByZeroPoly: return "DivideByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPoly: return "ZeroPoly";
    case ErrorCode::ConstantPoly: return "ConstantPoly";
    case ErrorCode::NotCoprimeToCharacteristic: return "NotCoprimeToCharacteristic";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotAnMCode: return "NotAnMCode";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::PreconditionDegree: return "PreconditionDegree";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mcodes
