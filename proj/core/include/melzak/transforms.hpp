#pragma once

// Binomial transforms with simple poles and their closed forms.
//
// Throughout, the "pole sum" of order r is
//
//   L_r(f; n, lambda) = sum_{k=0}^{n} C(n, k) (-1)^k f(k) / (k - lambda)^r
//
// computed by direct summation. It is the ground truth every closed form in
// this header is checked against. lambda must avoid the poles 0, 1, ..., n.
//
// Melzak's classic closed form covers deg f <= n; Gould's extension adds one
// more degree; the general form handles any degree through a correction built
// from Stirling numbers of the second kind:
//
//   L_1(f) = f(lambda) L_1(1) + (-1)^n n! sum_{m>n} a_m
//                                  sum_{j<m} lambda^j S(m - j - 1, n).

#include <cstddef>
#include <span>
#include <vector>

#include "melzak/polynomial.hpp"
#include "melzak/rational.hpp"
#include "melzak/rational_function.hpp"

namespace melzak {

struct PoleSumParams {
  Polynomial f;
  unsigned long n = 0;
  Rational lambda;
  unsigned r = 1;
};

// Throws PoleError if lambda is in {0..n}.
void RequireNotPole(const Rational& lambda, unsigned long n);
// Throws PoleError if y is in {0, -1, ..., -n}.
void RequireNotNegativePole(const Rational& y, unsigned long n);

// Direct summation of L_r. ArgumentError for r = 0, PoleError on a pole.
Rational LhsPoleSum(const PoleSumParams& params);
Rational LhsPoleSum(const Polynomial& f, unsigned long n,
                    const Rational& lambda, unsigned r = 1);

// sum_{k=0}^{n} C(n, k) (-1)^k f(x - k) / (y + k), evaluated term by term.
Rational ClassicLhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y);

// n! f(x + y) / (y (y+1) ... (y+n)). DegreeError if deg f > n.
Rational MelzakClassicRhs(const Polynomial& f, unsigned long n,
                          const Rational& x, const Rational& y);

// Classic form minus n! a_{n+1}. DegreeError if deg f > n + 1.
Rational MelzakGouldRhs(const Polynomial& f, unsigned long n,
                        const Rational& x, const Rational& y);

// n! / (y (y+1) ... (y+n)).
Rational PartialFractionValue(unsigned long n, const Rational& y);

// The Stirling correction as a polynomial in lambda; zero when deg f <= n.
// Requires n >= 1.
Polynomial CorrectionPolynomial(const Polynomial& f, unsigned long n);
Rational CorrectionSum(const Polynomial& f, unsigned long n,
                       const Rational& lambda);

// f(lambda) L_1(1) + correction. Requires n >= 1.
Rational MelzakGeneralRhs(const Polynomial& f, unsigned long n,
                          const Rational& lambda);
Rational MelzakGeneralRhs(const TruncatedPowerSeries& f, unsigned long n,
                          const Rational& lambda);

// (-1)^(n+1) n! / (lambda (lambda-1) ... (lambda-n)), i.e. L_1(1) as a
// function of lambda.
RationalFunction PoleSumClosedForm(unsigned long n);

// Partial sums (-1)^(n+1) n! sum_{m=n}^{M} S(m, n) / lambda^(m+1) for
// M = n .. max_m, in that order. Converges to L_1(1) for |lambda| > n.
// ZeroError if lambda = 0; ArgumentError if max_m < n.
std::vector<Rational> SeriesTPartialSums(unsigned long n,
                                         const Rational& lambda,
                                         unsigned long max_m);
Rational SeriesTPartial(unsigned long n, const Rational& lambda,
                        unsigned long max_m);

// f'(0) + f(0) H_n + (-1)^(n-1) n! sum_{m>n} a_m S(m-1, n). n >= 1.
Rational Corollary3Rhs(const Polynomial& f, unsigned long n);
Rational Corollary3Rhs(const TruncatedPowerSeries& f, unsigned long n);
// sum_{k=1}^{n} C(n, k) (-1)^(k-1) f(k) / k. n >= 1.
Rational Corollary3Lhs(const Polynomial& f, unsigned long n);

// sum_{k=0}^{n} C(n, k) (-1)^k f(x - k) / ((y + k)(z + k)), direct.
Rational TwoPoleLhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y, const Rational& z);
// n!/(z - y) [f(x+y)/(y)_(n+1) - f(x+z)/(z)_(n+1)], deg f <= n + 1.
Rational TwoPoleRhs(const Polynomial& f, unsigned long n, const Rational& x,
                    const Rational& y, const Rational& z);

// f'(lambda) L_1(1) + f(lambda) L_2(1)
//   + (-1)^n n! sum_{m>n} a_m sum_{j=1}^{m-1} j lambda^(j-1) S(m-j-1, n).
Rational SecondOrderRhs(const Polynomial& f, unsigned long n,
                        const Rational& lambda);

// L_r(f) from the closed form f(lambda) L_1(1) + correction, differentiated
// symbolically r - 1 times in lambda and divided by (r - 1)!.
Rational HigherOrderRhs(const Polynomial& f, unsigned long n,
                        const Rational& lambda, unsigned r);

// The closed form f(lambda) L_1(1) + correction as a rational function of
// lambda.
RationalFunction GeneralClosedForm(const Polynomial& f, unsigned long n);

// h(m) = sum_{k=0}^{m} C(m, k) (-1)^k g(k) for m = 0 .. g.size() - 1.
// Applying it twice returns g.
std::vector<Rational> BinomialTransform(std::span<const Rational> g);

}  // namespace melzak
