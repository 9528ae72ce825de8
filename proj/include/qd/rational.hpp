#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "qd/errors.hpp"

namespace qd {

// Exact rational number backed by 64-bit numerator/denominator, always kept
// normalized (den > 0, gcd(|num|, den) = 1). Products are formed in 128 bits
// and narrowing back is overflow-checked, never silent.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorCode::ArithmeticOverflow, "division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Always the explicit "p/q" form, e.g. "3/1", "-1/2".
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

 private:
  using i128 = __int128;

  void normalize() {
    if (den_ == 0) fail(ErrorCode::ArithmeticOverflow, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational from128(i128 n, i128 d);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace qd
