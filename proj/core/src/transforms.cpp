#include "melzak/transforms.hpp"

#include <string>

#include "melzak/combinatorics.hpp"
#include "melzak/errors.hpp"

namespace melzak {
namespace {

Rational SignedFactorial(unsigned long n, bool negative) {
  Rational f(Factorial(n));
  return negative ? -f : f;
}

void RequirePositive(unsigned long n, const char* op) {
  if (n == 0) {
    throw ArgumentError(std::string(op) + " requires n >= 1");
  }
}

void RequireDegreeAtMost(const Polynomial& f, std::size_t bound,
                         const char* op) {
  if (f.degree() > bound) {
    throw DegreeError(std::string(op) + ": degree " + f.degree().ToString() +
                      " exceeds " + std::to_string(bound));
  }
}

// sum_{k=0}^{n} C(n,k) (-1)^k value(k) with an exact big-rational
// accumulator.
template <typename Term>
Rational AlternatingBinomialSum(unsigned long n, Term&& term) {
  Rational sum;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational t = term(k);
    if (t.is_zero()) continue;
    t *= Rational(Binomial(n, static_cast<std::int64_t>(k)));
    if (k % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
  }
  return sum;
}

}  // namespace

void RequireNotPole(const Rational& lambda, unsigned long n) {
  if (IsIndexInRange(lambda, n)) {
    throw PoleError(lambda.ToString(),
                    "lambda = " + lambda.ToString() + " is a pole (0.." +
                        std::to_string(n) + ")");
  }
}

void RequireNotNegativePole(const Rational& y, unsigned long n) {
  if (IsIndexInRange(-y, n)) {
    throw PoleError(y.ToString(), "y = " + y.ToString() + " is a pole (-" +
                                      std::to_string(n) + "..0)");
  }
}

Rational LhsPoleSum(const PoleSumParams& params) {
  return LhsPoleSum(params.f, params.n, params.lambda, params.r);
}

Rational LhsPoleSum(const Polynomial& f, unsigned long n,
                    const Rational& lambda, unsigned r) {
  if (r == 0) throw ArgumentError("pole order r must be >= 1");
  RequireNotPole(lambda, n);
  if (f.is_zero()) return Rational();
  return AlternatingBinomialSum(n, [&](unsigned long k) {
    const Rational value = f.Evaluate(Rational(k));
    if (value.is_zero()) return value;
    return value / (Rational(k) - lambda).Pow(r);
  });
}

Rational ClassicLhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y) {
  RequireNotNegativePole(y, n);
  return AlternatingBinomialSum(n, [&](unsigned long k) {
    const Rational kk(k);
    return f.Evaluate(x - kk) / (y + kk);
  });
}

Rational MelzakClassicRhs(const Polynomial& f, unsigned long n,
                          const Rational& x, const Rational& y) {
  RequireDegreeAtMost(f, n, "melzak_classic_rhs");
  RequireNotNegativePole(y, n);
  return Rational(Factorial(n)) * f.Evaluate(x + y) / RisingProduct(y, n);
}

Rational MelzakGouldRhs(const Polynomial& f, unsigned long n,
                        const Rational& x, const Rational& y) {
  RequireDegreeAtMost(f, n + 1, "melzak_gould_rhs");
  RequireNotNegativePole(y, n);
  const Rational factorial(Factorial(n));
  return factorial * f.Evaluate(x + y) / RisingProduct(y, n) -
         factorial * f.coefficient(n + 1);
}

Rational PartialFractionValue(unsigned long n, const Rational& y) {
  RequireNotNegativePole(y, n);
  return Rational(Factorial(n)) / RisingProduct(y, n);
}

Polynomial CorrectionPolynomial(const Polynomial& f, unsigned long n) {
  RequirePositive(n, "correction_sum");
  if (f.degree() <= n) return Polynomial();
  const std::size_t d = f.degree().value();
  const StirlingTable stirling(d, n);
  // Coefficient of lambda^j collects a_m S(m - j - 1, n) over m > n; the
  // Stirling factor vanishes unless m - j - 1 >= n.
  std::vector<Rational> coefficients(d - n);
  for (std::size_t m = n + 1; m <= d; ++m) {
    const Rational& a = f.coefficients()[m];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j + n + 1 <= m; ++j) {
      coefficients[j] += a * Rational(stirling(m - j - 1, n));
    }
  }
  return Polynomial(std::move(coefficients)) * SignedFactorial(n, n % 2 == 1);
}

Rational CorrectionSum(const Polynomial& f, unsigned long n,
                       const Rational& lambda) {
  return CorrectionPolynomial(f, n).Evaluate(lambda);
}

Rational MelzakGeneralRhs(const Polynomial& f, unsigned long n,
                          const Rational& lambda) {
  RequirePositive(n, "melzak_general_rhs");
  RequireNotPole(lambda, n);
  return f.Evaluate(lambda) * LhsPoleSum(Polynomial::Constant(1), n, lambda) +
         CorrectionSum(f, n, lambda);
}

Rational MelzakGeneralRhs(const TruncatedPowerSeries& f, unsigned long n,
                          const Rational& lambda) {
  return MelzakGeneralRhs(f.poly(), n, lambda);
}

RationalFunction PoleSumClosedForm(unsigned long n) {
  Polynomial denominator = Polynomial::Constant(1);
  for (unsigned long j = 0; j <= n; ++j) {
    denominator *= Polynomial::LinearFactor(Rational(j));
  }
  return RationalFunction(
      Polynomial::Constant(SignedFactorial(n, n % 2 == 0)),
      std::move(denominator));
}

std::vector<Rational> SeriesTPartialSums(unsigned long n,
                                         const Rational& lambda,
                                         unsigned long max_m) {
  if (lambda.is_zero()) throw ZeroError("series undefined at lambda = 0");
  if (max_m < n) {
    throw ArgumentError("series needs M >= n (M = " + std::to_string(max_m) +
                        ", n = " + std::to_string(n) + ")");
  }
  const StirlingTable stirling(max_m, n);
  const Rational prefactor = SignedFactorial(n, n % 2 == 0);
  const Rational inverse = lambda.Reciprocal();
  Rational power = inverse.Pow(static_cast<std::int64_t>(n) + 1);
  Rational sum;
  std::vector<Rational> partials;
  partials.reserve(max_m - n + 1);
  for (unsigned long m = n; m <= max_m; ++m) {
    sum += Rational(stirling(m, n)) * power;
    partials.push_back(prefactor * sum);
    power *= inverse;
  }
  return partials;
}

Rational SeriesTPartial(unsigned long n, const Rational& lambda,
                        unsigned long max_m) {
  return SeriesTPartialSums(n, lambda, max_m).back();
}

Rational Corollary3Rhs(const Polynomial& f, unsigned long n) {
  RequirePositive(n, "corollary3_rhs");
  Rational result = f.coefficient(1) + f.coefficient(0) * Harmonic(n);
  if (f.degree() <= n) return result;
  const std::size_t d = f.degree().value();
  const StirlingTable stirling(d - 1, n);
  Rational correction;
  for (std::size_t m = n + 1; m <= d; ++m) {
    correction += f.coefficients()[m] * Rational(stirling(m - 1, n));
  }
  return result + SignedFactorial(n, n % 2 == 0) * correction;
}

Rational Corollary3Rhs(const TruncatedPowerSeries& f, unsigned long n) {
  return Corollary3Rhs(f.poly(), n);
}

Rational Corollary3Lhs(const Polynomial& f, unsigned long n) {
  RequirePositive(n, "corollary3_lhs");
  Rational sum;
  for (unsigned long k = 1; k <= n; ++k) {
    const Rational kk(k);
    const Rational term = Rational(Binomial(n, static_cast<std::int64_t>(k))) *
                          f.Evaluate(kk) / kk;
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational TwoPoleLhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y, const Rational& z) {
  RequireNotNegativePole(y, n);
  RequireNotNegativePole(z, n);
  return AlternatingBinomialSum(n, [&](unsigned long k) {
    const Rational kk(k);
    return f.Evaluate(x - kk) / ((y + kk) * (z + kk));
  });
}

Rational TwoPoleRhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y, const Rational& z) {
  RequireDegreeAtMost(f, n + 1, "two_pole_rhs");
  if (y == z) {
    throw DistinctnessError("two_pole_rhs needs y != z (both " +
                            y.ToString() + ")");
  }
  RequireNotNegativePole(y, n);
  RequireNotNegativePole(z, n);
  const Rational factorial(Factorial(n));
  return factorial / (z - y) *
         (f.Evaluate(x + y) / RisingProduct(y, n) -
          f.Evaluate(x + z) / RisingProduct(z, n));
}

Rational SecondOrderRhs(const Polynomial& f, unsigned long n,
                        const Rational& lambda) {
  RequirePositive(n, "second_order_rhs");
  RequireNotPole(lambda, n);
  const Polynomial one = Polynomial::Constant(1);
  Rational result = f.Derivative().Evaluate(lambda) * LhsPoleSum(one, n, lambda, 1) +
                    f.Evaluate(lambda) * LhsPoleSum(one, n, lambda, 2);
  if (f.degree() <= n) return result;

  const std::size_t d = f.degree().value();
  const StirlingTable stirling(d, n);
  Rational correction;
  for (std::size_t m = n + 1; m <= d; ++m) {
    const Rational& a = f.coefficients()[m];
    if (a.is_zero()) continue;
    Rational inner;
    Rational power(1);  // lambda^(j-1)
    for (std::size_t j = 1; j + 1 <= m; ++j) {
      if (m - j - 1 < n) break;
      inner += Rational(j) * power * Rational(stirling(m - j - 1, n));
      power *= lambda;
    }
    correction += a * inner;
  }
  return result + SignedFactorial(n, n % 2 == 1) * correction;
}

RationalFunction GeneralClosedForm(const Polynomial& f, unsigned long n) {
  return RationalFunction(f) * PoleSumClosedForm(n) +
         RationalFunction(CorrectionPolynomial(f, n));
}

Rational HigherOrderRhs(const Polynomial& f, unsigned long n,
                        const Rational& lambda, unsigned r) {
  RequirePositive(n, "higher_order_rhs");
  if (r == 0) throw ArgumentError("pole order r must be >= 1");
  RequireNotPole(lambda, n);
  RationalFunction phi = GeneralClosedForm(f, n);
  for (unsigned i = 1; i < r; ++i) phi = phi.Derivative();
  return phi.Evaluate(lambda) / Rational(Factorial(r - 1));
}

std::vector<Rational> BinomialTransform(std::span<const Rational> g) {
  std::vector<Rational> h;
  h.reserve(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    h.push_back(AlternatingBinomialSum(
        m, [&](unsigned long k) { return g[k]; }));
  }
  return h;
}

}  // namespace melzak
