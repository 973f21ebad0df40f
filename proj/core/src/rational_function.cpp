#include "melzak/rational_function.hpp"

#include "melzak/errors.hpp"

namespace melzak {

RationalFunction::RationalFunction()
    : denominator_(Polynomial::Constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator,
                                   Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  Normalize();
}

RationalFunction::RationalFunction(Polynomial polynomial)
    : numerator_(std::move(polynomial)),
      denominator_(Polynomial::Constant(Rational(1))) {}

void RationalFunction::Normalize() {
  if (denominator_.is_zero()) {
    throw ZeroError("rational function with zero denominator");
  }
  if (numerator_.is_zero()) {
    denominator_ = Polynomial::Constant(Rational(1));
    return;
  }
  const Polynomial g = Gcd(numerator_, denominator_);
  if (g.degree() > 0) {
    numerator_ = DivMod(numerator_, g).first;
    denominator_ = DivMod(denominator_, g).first;
  }
  const Rational lead = denominator_.leading_coefficient();
  if (lead != Rational(1)) {
    const Rational inverse = lead.Reciprocal();
    numerator_ *= inverse;
    denominator_ *= inverse;
  }
}

Rational RationalFunction::Evaluate(const Rational& t) const {
  const Rational den = denominator_.Evaluate(t);
  if (den.is_zero()) {
    throw PoleError(t.ToString(),
                    "rational function has a pole at " + t.ToString());
  }
  return numerator_.Evaluate(t) / den;
}

RationalFunction RationalFunction::Derivative() const {
  // With D = G E, G = gcd(D, D'), every pole order rises by exactly one, so
  //   (N/D)' = (N' E - N D'/G) / (D E)
  // is already in lowest terms and D E is monic.
  const Polynomial d_prime = denominator_.Derivative();
  const Polynomial g = Gcd(denominator_, d_prime);
  const Polynomial e = DivMod(denominator_, g).first;
  Polynomial num = numerator_.Derivative() * e;
  if (!d_prime.is_zero()) num -= numerator_ * DivMod(d_prime, g).first;
  if (num.is_zero()) return RationalFunction();
  return RationalFunction(std::move(num), denominator_ * e, CanonicalTag{});
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-numerator_, denominator_, CanonicalTag{});
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.denominator_ == b.denominator_) {
    return RationalFunction(a.numerator_ + b.numerator_, a.denominator_);
  }
  return RationalFunction(
      a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
      a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.numerator_ * b.numerator_,
                          a.denominator_ * b.denominator_);
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  if (b.is_zero()) throw ZeroError("rational function division by zero");
  return RationalFunction(a.numerator_ * b.denominator_,
                          a.denominator_ * b.numerator_);
}

std::string RationalFunction::ToString() const {
  return "(" + numerator_.ToString() + ")/(" + denominator_.ToString() + ")";
}

}  // namespace melzak
