#include "melzak/rational.hpp"

#include <cstdlib>
#include <sstream>

#include "melzak/errors.hpp"

namespace melzak {
namespace {

bool IsDigitString(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!IsDigitString(digits)) {
    throw ArgumentError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value;
  value.set_str(std::string(digits), 10);
  if (text.front() == '-') value = -value;
  return value;
}

BigInt PowerOfTen(unsigned long e) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, e);
  return result;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw ZeroError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  const std::string_view den = text.substr(slash + 1);
  if (den.find('/') != std::string_view::npos) {
    throw ArgumentError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(ParseInteger(text.substr(0, slash), text),
                  ParseInteger(den, text));
}

std::string Rational::ToString() const {
  // mpq get_str already omits "/1" for integers.
  return value_.get_str(10);
}

std::string Rational::ToScientific(int digits) const {
  if (digits < 0) digits = 0;
  if (is_zero()) {
    return "0." + std::string(static_cast<std::size_t>(digits), '0') + "e+00";
  }
  const mpq_class a = ::abs(value_);
  // Initial guess from the digit counts, then correct by comparison so that
  // 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto power = [](long k) {
    return k >= 0 ? mpq_class(PowerOfTen(static_cast<unsigned long>(k)))
                  : mpq_class(BigInt(1), PowerOfTen(static_cast<unsigned long>(-k)));
  };
  while (a < power(e)) --e;
  while (a >= power(e + 1)) ++e;

  mpq_class scaled = a * power(digits - e) + mpq_class(1, 2);
  BigInt mantissa = scaled.get_num() / scaled.get_den();
  if (mantissa == PowerOfTen(static_cast<unsigned long>(digits) + 1)) {
    mantissa /= 10;
    ++e;
  }
  const std::string m = mantissa.get_str(10);
  std::ostringstream out;
  if (sign() < 0) out << '-';
  out << m.front();
  if (digits > 0) out << '.' << m.substr(1);
  out << 'e' << (e < 0 ? '-' : '+');
  const long ae = std::labs(e);
  if (ae < 10) out << '0';
  out << ae;
  return out.str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::Reciprocal() const {
  if (is_zero()) throw ZeroError("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::Pow(std::int64_t exponent) const {
  if (exponent < 0) return Reciprocal().Pow(-exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class result;
  mpz_swap(mpq_numref(result.get_mpq_t()), num.get_mpz_t());
  mpz_swap(mpq_denref(result.get_mpq_t()), den.get_mpz_t());
  return Rational(std::move(result));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ZeroError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

bool IsIndexInRange(const Rational& r, unsigned long n) {
  if (!r.is_integer() || r.sign() < 0) return false;
  return r.numerator() <= n;
}

}  // namespace melzak
