#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ppsym {

/// Thrown when exact rational arithmetic would leave the int64 range.
struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("rational overflow") {}
};

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of literals
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const {
    if (num_ == INT64_MIN) throw RationalOverflow();
    return Rational(-num_, den_, raw_tag{});
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t l, r, d;
    if (__builtin_mul_overflow(a.num_, b.den_ / g, &l) || __builtin_mul_overflow(b.num_, a.den_ / g, &r) ||
        __builtin_add_overflow(l, r, &l) || __builtin_mul_overflow(a.den_ / g, b.den_, &d))
      throw RationalOverflow();
    return Rational(l, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    std::int64_t n, d;
    if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) || __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d))
      throw RationalOverflow();
    return Rational(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * b.reciprocal();
  }
  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(den_, num_);
  }
  /// Integer power; throws RationalOverflow when the result does not fit.
  Rational pow(std::int64_t e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational result(1), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    // cross-multiplication in 128 bits never overflows for int64 operands
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct raw_tag {};
  Rational(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      if (num_ == INT64_MIN || den_ == INT64_MIN) throw RationalOverflow();
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ppsym
