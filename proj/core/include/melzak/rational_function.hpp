#pragma once

#include <string>

#include "melzak/polynomial.hpp"

namespace melzak {

// Quotient of two polynomials in lowest terms with a monic denominator.
// Because the representation is canonical, == is equality of functions.
class RationalFunction {
 public:
  // The zero function.
  RationalFunction();
  // Throws ZeroError on a zero denominator.
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial polynomial);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }

  // Throws PoleError when the denominator vanishes at t.
  Rational Evaluate(const Rational& t) const;
  // Quotient rule, result reduced.
  RationalFunction Derivative() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  // ZeroError when b is zero.
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

  // "(num)/(den)" in coefficient-list form.
  std::string ToString() const;

 private:
  struct CanonicalTag {};
  RationalFunction(Polynomial numerator, Polynomial denominator, CanonicalTag)
      : numerator_(std::move(numerator)),
        denominator_(std::move(denominator)) {}

  void Normalize();

  Polynomial numerator_;
  Polynomial denominator_;
};

inline Rational ratfunc_eval(const RationalFunction& r, const Rational& t) {
  return r.Evaluate(t);
}
inline RationalFunction ratfunc_derivative(const RationalFunction& r) {
  return r.Derivative();
}

}  // namespace melzak
