#include "melzak/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "melzak/errors.hpp"

namespace melzak {
namespace {

const BigInt& ZeroBigInt() {
  static const BigInt zero(0);
  return zero;
}

}  // namespace

BigInt Factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt Binomial(unsigned long n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

Rational GeneralizedBinomial(const Rational& top, unsigned long k) {
  Rational result(1);
  for (unsigned long i = 0; i < k; ++i) {
    result *= top - Rational(i);
  }
  return result / Rational(Factorial(k));
}

StirlingTable::StirlingTable(std::size_t max_p, std::size_t max_n)
    : max_p_(max_p), max_n_(max_n) {
  row_offsets_.reserve(max_p + 2);
  std::size_t offset = 0;
  for (std::size_t p = 0; p <= max_p; ++p) {
    row_offsets_.push_back(offset);
    offset += std::min(p, max_n) + 1;
  }
  row_offsets_.push_back(offset);
  values_.resize(offset);

  values_[0] = 1;
  for (std::size_t p = 1; p <= max_p; ++p) {
    const std::size_t row = RowOffset(p);
    const std::size_t prev = RowOffset(p - 1);
    const std::size_t prev_width = std::min(p - 1, max_n) + 1;
    const std::size_t width = std::min(p, max_n) + 1;
    // S(p, 0) = 0 for p > 0.
    for (std::size_t n = 1; n < width; ++n) {
      BigInt& cell = values_[row + n];
      if (n < prev_width) {
        cell = values_[prev + n] * n;
      }
      cell += values_[prev + n - 1];
    }
  }
}

std::size_t StirlingTable::RowOffset(std::size_t p) const {
  return row_offsets_[p];
}

const BigInt& StirlingTable::operator()(std::size_t p, std::size_t n) const {
  if (p > max_p_ || n > max_n_) {
    throw std::out_of_range("S(" + std::to_string(p) + ", " +
                            std::to_string(n) + ") outside table bounds");
  }
  if (n > p) return ZeroBigInt();
  return values_[RowOffset(p) + n];
}

BigInt Stirling2(unsigned long p, unsigned long n) {
  if (n > p) return BigInt(0);
  if (n == 0) return BigInt(p == 0 ? 1 : 0);
  // Column sweep: row[j] holds S(q, j) for the current q, j <= n.
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned long q = 1; q <= p; ++q) {
    const unsigned long top = std::min<unsigned long>(q, n);
    for (unsigned long j = top; j >= 1; --j) {
      row[j] = row[j] * j + row[j - 1];
    }
    row[0] = 0;
  }
  return row[n];
}

BigInt Stirling2Alternating(unsigned long p, unsigned long n) {
  BigInt sum;
  BigInt power;
  for (unsigned long k = 0; k <= n; ++k) {
    mpz_ui_pow_ui(power.get_mpz_t(), k, p);  // 0^0 = 1 in GMP as well.
    const BigInt term = Binomial(n, static_cast<std::int64_t>(k)) * power;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt divisor = Factorial(n);
  if (n % 2 == 1) divisor = -divisor;
  if (!mpz_divisible_p(sum.get_mpz_t(), divisor.get_mpz_t())) {
    throw InternalError("alternating sum for S(" + std::to_string(p) + ", " +
                        std::to_string(n) + ") not divisible by n!");
  }
  BigInt result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), divisor.get_mpz_t());
  return result;
}

BigInt AlternatingPowerSum(unsigned long n, unsigned long p) {
  BigInt sum;
  BigInt power;
  for (unsigned long k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(power.get_mpz_t(), k, p);
    const BigInt term = Binomial(n, static_cast<std::int64_t>(k)) * power;
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational Harmonic(unsigned long n) {
  Rational sum;
  for (unsigned long k = 1; k <= n; ++k) {
    sum += Rational(BigInt(1), BigInt(k));
  }
  return sum;
}

Rational RisingProduct(const Rational& y, unsigned long n) {
  Rational product = y;
  for (unsigned long j = 1; j <= n; ++j) {
    product *= y + Rational(j);
  }
  return product;
}

}  // namespace melzak
