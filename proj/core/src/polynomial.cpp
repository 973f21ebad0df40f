#include "melzak/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "melzak/errors.hpp"

namespace melzak {

std::string Degree::ToString() const {
  return is_minus_infinity() ? "-inf" : std::to_string(*value_);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  Trim();
}

Polynomial Polynomial::Constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::Monomial(Rational c, std::size_t d) {
  std::vector<Rational> coefficients(d + 1);
  coefficients[d] = std::move(c);
  return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::LinearFactor(const Rational& root) {
  return Polynomial({-root, Rational(1)});
}

Polynomial Polynomial::Parse(std::string_view text) {
  std::vector<Rational> coefficients;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? text.npos
                                                           : comma - start);
    coefficients.push_back(Rational::Parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coefficients));
}

std::string Polynomial::ToString() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i > 0) out << ',';
    out << coefficients_[i];
  }
  return out.str();
}

Degree Polynomial::degree() const {
  return is_zero() ? Degree::MinusInfinity()
                   : Degree::Finite(coefficients_.size() - 1);
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational();
}

Rational Polynomial::leading_coefficient() const {
  return is_zero() ? Rational() : coefficients_.back();
}

Rational Polynomial::Evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::Derivative() const {
  if (coefficients_.size() <= 1) return Polynomial();
  std::vector<Rational> result(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    result[i - 1] = coefficients_[i] * Rational(i);
  }
  return Polynomial(std::move(result));
}

Polynomial Polynomial::ReflectShift(const Rational& x) const {
  return Compose(Polynomial({x, Rational(-1)}));
}

Polynomial Polynomial::Compose(const Polynomial& g) const {
  Polynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= g;
    acc += Constant(*it);
  }
  return acc;
}

Polynomial Polynomial::Monic() const {
  if (is_zero()) return *this;
  const Rational inverse = leading_coefficient().Reciprocal();
  return *this * inverse;
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  Trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  Trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> result(a.coefficients_.size() +
                               b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      result[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(result));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& coefficient : coefficients_) coefficient *= c;
  return *this;
}

void Polynomial::Trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw ZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};

  const std::size_t db = b.degree().value();
  std::vector<Rational> remainder(a.coefficients().begin(),
                                  a.coefficients().end());
  std::vector<Rational> quotient(remainder.size() - db);
  const Rational lead_inverse = b.leading_coefficient().Reciprocal();
  const auto divisor = b.coefficients();
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Rational q = remainder[i + db] * lead_inverse;
    if (q.is_zero()) continue;
    quotient[i] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      remainder[i + j] -= q * divisor[j];
    }
  }
  remainder.resize(db);
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

Polynomial Gcd(Polynomial a, Polynomial b) {
  // Remainders are kept monic to damp coefficient growth.
  a = a.Monic();
  b = b.Monic();
  while (!b.is_zero()) {
    Polynomial r = DivMod(a, b).second.Monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Polynomial Pow(const Polynomial& p, std::size_t e) {
  Polynomial result = Polynomial::Constant(Rational(1));
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

TruncatedPowerSeries::TruncatedPowerSeries(const Polynomial& series,
                                           std::size_t order)
    : order_(order) {
  const auto c = series.coefficients();
  const std::size_t keep = std::min(c.size(), order + 1);
  poly_ = Polynomial(std::vector<Rational>(c.begin(), c.begin() + keep));
}

}  // namespace melzak
