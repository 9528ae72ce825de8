#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qd {

enum class ErrorCode {
  // pattern validity
  SumNotDivisibleBy4,
  SumBelowMinusFour,
  EntryBelowMinusOne,
  // zero breaking
  ParityViolation,
  ZeroPartNotAllowed,
  PartSumMismatch,
  IndexOutOfRange,
  // families / enumeration
  GenusTooSmall,
  ParameterOutOfRange,
  // double cover arithmetic
  OddCountNotEven,
  // coverings
  NonIntegralGenus,
  NegativeGenus,
  FiberMismatch,
  ConventionViolation,
  GaussBonnetMismatch,
  InternalFormulaMismatch,
  BoundsTooSmall,
  // flat surfaces
  AngleNotMultipleOfPi,
  NotAClosedWalk,
  AlreadySquare,
  UnknownExample,
  SingularMatrix,
  InvalidSurface,
  // io / plumbing
  PatternSyntax,
  FileSchema,
  ArithmeticOverflow,
};

std::string_view to_string(ErrorCode code);

// Internal-consistency failures indicate a bug in this library rather than
// bad input; the CLI maps them to a distinct exit code.
constexpr bool is_internal(ErrorCode code) {
  return code == ErrorCode::GaussBonnetMismatch ||
         code == ErrorCode::InternalFormulaMismatch ||
         code == ErrorCode::OddCountNotEven;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qd
