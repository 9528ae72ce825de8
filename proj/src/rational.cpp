#include "qd/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace qd {

Rational Rational::from128(i128 n, i128 d) {
  if (d == 0) fail(ErrorCode::ArithmeticOverflow, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 a = n < 0 ? -n : n;
  i128 b = d;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  constexpr i128 lo = std::numeric_limits<long long>::min();
  constexpr i128 hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi || d > hi)
    fail(ErrorCode::ArithmeticOverflow, "rational exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    if (s.empty()) fail(ErrorCode::PatternSyntax, "empty number");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail(ErrorCode::PatternSyntax, "bare sign");
    long long v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail(ErrorCode::PatternSyntax,
             "bad digit in number '" + std::string(s) + "'");
      if (v > (std::numeric_limits<long long>::max() - 9) / 10)
        fail(ErrorCode::ArithmeticOverflow, "number too large");
      v = v * 10 + (s[i] - '0');
    }
    return s[0] == '-' ? -v : v;
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  long long n = parse_int(text.substr(0, slash));
  long long d = parse_int(text.substr(slash + 1));
  if (d == 0) fail(ErrorCode::FileSchema, "rational with zero denominator");
  return Rational(n, d);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SumNotDivisibleBy4: return "SumNotDivisibleBy4";
    case ErrorCode::SumBelowMinusFour: return "SumBelowMinusFour";
    case ErrorCode::EntryBelowMinusOne: return "EntryBelowMinusOne";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::ZeroPartNotAllowed: return "ZeroPartNotAllowed";
    case ErrorCode::PartSumMismatch: return "PartSumMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::OddCountNotEven: return "OddCountNotEven";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::ConventionViolation: return "ConventionViolation";
    case ErrorCode::GaussBonnetMismatch: return "GaussBonnetMismatch";
    case ErrorCode::InternalFormulaMismatch: return "InternalFormulaMismatch";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::AngleNotMultipleOfPi: return "AngleNotMultipleOfPi";
    case ErrorCode::NotAClosedWalk: return "NotAClosedWalk";
    case ErrorCode::AlreadySquare: return "AlreadySquare";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::PatternSyntax: return "PatternSyntax";
    case ErrorCode::FileSchema: return "FileSchema";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "UnknownError";
}

}  // namespace qd
