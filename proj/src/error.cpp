#include "quartic/error.hpp"

namespace quartic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::UndefinedGcd: return "UndefinedGcd";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NoQuarticStructure: return "NoQuarticStructure";
    case ErrorCode::PrimesNotDistinct: return "PrimesNotDistinct";
    case ErrorCode::NoGenerator: return "NoGenerator";
    case ErrorCode::ExponentUnavailable: return "ExponentUnavailable";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::MessageNotUnit: return "MessageNotUnit";
    case ErrorCode::MessageOutOfRange: return "MessageOutOfRange";
    case ErrorCode::NotAQuarticResidue: return "NotAQuarticResidue";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotSixteenRoots: return "NotSixteenRoots";
    case ErrorCode::SessionStateError: return "SessionStateError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::OracleBound: return "OracleBound";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace quartic
