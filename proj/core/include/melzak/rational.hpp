#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace melzak {

using BigInt = mpz_class;

// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1 and
// zero is 0/1. Every constructor and operator returns a canonical value, so
// == is mathematical equality.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT(runtime/explicit)
      : value_(Widen(value)) {}
  explicit Rational(const BigInt& value) : value_(value) {}
  // Throws ZeroError when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p" or "p/q" with optional leading sign; q may be negative on
  // input, the result is canonical. Throws ArgumentError on malformed text
  // and ZeroError on q = 0.
  static Rational Parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p/q", or "p" when q = 1.
  std::string ToString() const;

  // Exact rendering d.ddd...e+XX with `digits` digits after the point,
  // rounded half away from zero. No floating point involved.
  std::string ToScientific(int digits) const;

  Rational abs() const;
  Rational Reciprocal() const;  // ZeroError on zero.
  Rational Pow(std::int64_t exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  template <std::integral T>
  static auto Widen(T value) {
    if constexpr (std::is_signed_v<T>) {
      return static_cast<long>(value);
    } else {
      return static_cast<unsigned long>(value);
    }
  }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// True when r is an integer k with 0 <= k <= n.
bool IsIndexInRange(const Rational& r, unsigned long n);

}  // namespace melzak
