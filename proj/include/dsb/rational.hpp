#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "dsb/errors.hpp"

namespace dsb {

// Exact rational with int64 numerator/denominator, always normalized
// (denominator > 0, gcd 1). Comparisons cross-multiply in 128 bits, so the
// usual election-sized values never lose exactness.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: integers are rationals
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw InputError("rational with zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::string to_string(const Rational& r) {
    if (r.den_ == 1) return std::to_string(r.num_);
    return std::to_string(r.num_) + "/" + std::to_string(r.den_);
  }

 private:
  void normalize() {
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

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace dsb
