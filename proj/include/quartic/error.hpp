#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic {

enum class ErrorCode {
  InvalidArgument,
  InvalidModulus,
  UndefinedGcd,
  NotInvertible,
  ModuliNotCoprime,
  NotPrime,
  NotAUnit,
  GenerationFailed,
  NoQuarticStructure,
  PrimesNotDistinct,
  NoGenerator,
  ExponentUnavailable,
  ModeMismatch,
  MessageNotUnit,
  MessageOutOfRange,
  NotAQuarticResidue,
  RankOutOfRange,
  NotSixteenRoots,
  SessionStateError,
  SyntaxError,
  InvariantViolation,
  OracleBound,
  VerificationFailed,
};

/// Stable identifier for an error code, e.g. "NotInvertible".
std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quartic
