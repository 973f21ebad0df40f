#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "melzak/rational.hpp"

namespace melzak {

// Degree of a univariate polynomial. The zero polynomial has degree minus
// infinity, which compares below every finite degree, so "deg f <= n" is
// true for f = 0 and every n.
class Degree {
 public:
  static Degree MinusInfinity() { return Degree(); }
  static Degree Finite(std::size_t d) { return Degree(d); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  // Precondition: finite.
  std::size_t value() const { return *value_; }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) {
      return a.is_minus_infinity() == b.is_minus_infinity()
                 ? std::strong_ordering::equal
                 : (a.is_minus_infinity() ? std::strong_ordering::less
                                          : std::strong_ordering::greater);
    }
    return *a.value_ <=> *b.value_;
  }
  friend bool operator==(const Degree& a, std::size_t d) {
    return a == Degree(d);
  }
  friend std::strong_ordering operator<=>(const Degree& a, std::size_t d) {
    return a <=> Degree(d);
  }

  std::string ToString() const;

 private:
  Degree() = default;
  explicit Degree(std::size_t d) : value_(d) {}

  std::optional<std::size_t> value_;
};

// Dense univariate polynomial over the rationals, coefficient i multiplying
// t^i. The stored sequence never ends in a zero; the zero polynomial is the
// empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial Constant(Rational c);
  // c * t^d
  static Polynomial Monomial(Rational c, std::size_t d);
  // t - root
  static Polynomial LinearFactor(const Rational& root);

  // Lowest-degree-first comma-separated list, e.g. "1,0,2" = 1 + 2t^2.
  // "0" (or any all-zero list) parses to the zero polynomial.
  static Polynomial Parse(std::string_view text);
  // Inverse of Parse; the zero polynomial renders as "0".
  std::string ToString() const;

  bool is_zero() const { return coefficients_.empty(); }
  Degree degree() const;
  std::span<const Rational> coefficients() const { return coefficients_; }
  // Coefficient of t^i, zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  // Zero for the zero polynomial.
  Rational leading_coefficient() const;

  // Horner evaluation.
  Rational Evaluate(const Rational& t) const;
  Polynomial Derivative() const;
  // g with g(k) = f(x - k).
  Polynomial ReflectShift(const Rational& x) const;
  // f(g(t)).
  Polynomial Compose(const Polynomial& g) const;
  // Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial Monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void Trim();

  std::vector<Rational> coefficients_;
};

// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
// Throws ZeroError when b is zero.
std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b);

// Monic greatest common divisor; Gcd(0, 0) = 0.
Polynomial Gcd(Polynomial a, Polynomial b);

// p^e, p^0 = 1.
Polynomial Pow(const Polynomial& p, std::size_t e);

// Free-function spellings of the member operations.
inline Rational poly_eval(const Polynomial& f, const Rational& t) {
  return f.Evaluate(t);
}
inline Polynomial poly_derivative(const Polynomial& f) {
  return f.Derivative();
}
inline Polynomial poly_reflect_shift(const Polynomial& f, const Rational& x) {
  return f.ReflectShift(x);
}

// Formal power series known up to t^M. All arithmetic sees exactly `poly`;
// the order is kept so results can be reported as exact for the truncation.
class TruncatedPowerSeries {
 public:
  // Terms above t^order are discarded.
  TruncatedPowerSeries(const Polynomial& series, std::size_t order);

  const Polynomial& poly() const { return poly_; }
  std::size_t truncation_order() const { return order_; }

 private:
  Polynomial poly_;
  std::size_t order_;
};

}  // namespace melzak
