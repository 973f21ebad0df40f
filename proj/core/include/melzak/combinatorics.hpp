#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "melzak/rational.hpp"

namespace melzak {

BigInt Factorial(unsigned long n);

// C(n, k); zero outside 0 <= k <= n.
BigInt Binomial(unsigned long n, std::int64_t k);

// top (top - 1) ... (top - k + 1) / k! for rational top.
Rational GeneralizedBinomial(const Rational& top, unsigned long k);

// Stirling numbers of the second kind S(p, n) for p <= max_p, n <= max_n,
// filled from S(p, n) = n S(p-1, n) + S(p-1, n-1). Immutable after
// construction; safe to share between threads.
class StirlingTable {
 public:
  StirlingTable(std::size_t max_p, std::size_t max_n);

  std::size_t max_p() const { return max_p_; }
  std::size_t max_n() const { return max_n_; }

  // Zero for p < n. Throws std::out_of_range beyond the table bounds.
  const BigInt& operator()(std::size_t p, std::size_t n) const;

 private:
  std::size_t RowOffset(std::size_t p) const;

  std::size_t max_p_;
  std::size_t max_n_;
  // Row p holds n = 0 .. min(p, max_n).
  std::vector<BigInt> values_;
  std::vector<std::size_t> row_offsets_;
};

// S(p, n) by the recurrence.
BigInt Stirling2(unsigned long p, unsigned long n);

// S(p, n) from the alternating sum
//   (-1)^n n! S(p, n) = sum_{k=0}^{n} C(n, k) (-1)^k k^p,  0^0 = 1.
// Throws InternalError if the division is not exact.
BigInt Stirling2Alternating(unsigned long p, unsigned long n);

// sum_{k=1}^{n} C(n, k) (-1)^(k-1) k^p.
BigInt AlternatingPowerSum(unsigned long n, unsigned long p);

// 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational Harmonic(unsigned long n);

// y (y + 1) ... (y + n): n + 1 factors.
Rational RisingProduct(const Rational& y, unsigned long n);

}  // namespace melzak
