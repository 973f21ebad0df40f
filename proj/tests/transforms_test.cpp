#include "melzak/transforms.hpp"

#include <gtest/gtest.h>

#include "melzak/combinatorics.hpp"
#include "melzak/errors.hpp"
#include "test_support.hpp"

namespace melzak {
namespace {

using testing::R;

const Polynomial kOne = Polynomial::Constant(1);
const Polynomial kCube = Polynomial::Monomial(1, 3);

Rational DrawLambda(TrialRng& rng, unsigned long n) {
  while (true) {
    Rational v = testing::RandomRational(rng);
    if (!IsIndexInRange(v, n)) return v;
  }
}

Rational DrawY(TrialRng& rng, unsigned long n) {
  while (true) {
    Rational v = testing::RandomRational(rng);
    if (!IsIndexInRange(-v, n)) return v;
  }
}

TEST(LhsPoleSum, Examples) {
  EXPECT_EQ(LhsPoleSum(Polynomial(), 4, R("1/3"), 2), Rational(0));
  EXPECT_EQ(LhsPoleSum(kOne, 1, R("1/2")), Rational(-4));
  EXPECT_EQ(LhsPoleSum(kCube, 1, R("1/2")), Rational(-2));
  EXPECT_EQ(LhsPoleSum(PoleSumParams{kCube, 1, R("1/2"), 1}), Rational(-2));
}

TEST(LhsPoleSum, RejectsPolesAndZeroOrder) {
  EXPECT_THROW(LhsPoleSum(kOne, 3, Rational(2)), PoleError);
  EXPECT_THROW(LhsPoleSum(kOne, 3, Rational(0)), PoleError);
  EXPECT_NO_THROW(LhsPoleSum(kOne, 3, Rational(4)));
  EXPECT_NO_THROW(LhsPoleSum(kOne, 3, Rational(-1)));
  EXPECT_THROW(LhsPoleSum(kOne, 3, R("1/2"), 0), ArgumentError);
  // The zero polynomial still reports the pole.
  EXPECT_THROW(LhsPoleSum(Polynomial(), 3, Rational(1)), PoleError);
}

TEST(MelzakClassic, Examples) {
  EXPECT_EQ(MelzakClassicRhs(kOne, 3, 0, 1), R("1/4"));
  const Rational y = R("2/5");
  for (unsigned long n = 0; n <= 6; ++n) {
    EXPECT_EQ(MelzakClassicRhs(kOne, n, 0, y),
              Rational(Factorial(n)) / RisingProduct(y, n));
  }
  EXPECT_EQ(MelzakClassicRhs(Polynomial({1, 0, 1}), 2, 0, 1), R("2/3"));
  EXPECT_EQ(ClassicLhs(Polynomial({1, 0, 1}), 2, 0, 1), R("2/3"));
}

TEST(MelzakClassic, Errors) {
  EXPECT_THROW(MelzakClassicRhs(Polynomial({0, 0, 1}), 1, 0, 1), DegreeError);
  EXPECT_THROW(MelzakClassicRhs(kOne, 2, 0, -2), PoleError);
  EXPECT_THROW(MelzakClassicRhs(kOne, 2, 0, 0), PoleError);
  EXPECT_NO_THROW(MelzakClassicRhs(kOne, 2, 0, -3));
  EXPECT_NO_THROW(MelzakClassicRhs(Polynomial(), 0, 0, 1));
}

TEST(MelzakGould, Examples) {
  const Polynomial f({3, -1, 2});
  EXPECT_EQ(MelzakGouldRhs(f, 2, R("1/3"), R("5/2")),
            MelzakClassicRhs(f, 2, R("1/3"), R("5/2")));
  EXPECT_EQ(MelzakGouldRhs(Polynomial({0, 0, 1}), 1, 0, 1), R("-1/2"));
  const unsigned long n = 3;
  const Rational x = R("-2/3");
  const Rational y = R("7/4");
  const Rational fact(Factorial(n));
  EXPECT_EQ(MelzakGouldRhs(Polynomial::Monomial(1, n + 1), n, x, y),
            fact * (x + y).Pow(n + 1) / RisingProduct(y, n) - fact);
  EXPECT_THROW(MelzakGouldRhs(Polynomial::Monomial(1, 3), 1, 0, 1),
               DegreeError);
}

TEST(PartialFraction, Examples) {
  EXPECT_EQ(PartialFractionValue(0, R("3/7")), R("7/3"));
  EXPECT_EQ(PartialFractionValue(1, 1), R("1/2"));
  EXPECT_EQ(PartialFractionValue(3, 1), R("1/4"));
  EXPECT_THROW(PartialFractionValue(3, -3), PoleError);
}

TEST(CorrectionSum, Examples) {
  EXPECT_EQ(CorrectionSum(Polynomial({1, 2, 3}), 2, R("5/3")), Rational(0));
  for (unsigned long n = 1; n <= 6; ++n) {
    Rational expected(Factorial(n));
    if (n % 2 == 1) expected = -expected;
    EXPECT_EQ(CorrectionSum(Polynomial::Monomial(1, n + 1), n, R("-9/4")),
              expected);
  }
  EXPECT_EQ(CorrectionSum(kCube, 1, R("1/2")), R("-3/2"));
  EXPECT_THROW(CorrectionSum(kCube, 0, R("1/2")), ArgumentError);
}

TEST(MelzakGeneral, Examples) {
  EXPECT_EQ(MelzakGeneralRhs(kCube, 1, R("1/2")), Rational(-2));
  // deg f <= n: no correction.
  const Polynomial f({2, -1, 4});
  const Rational lambda = R("9/2");
  EXPECT_EQ(MelzakGeneralRhs(f, 3, lambda),
            f.Evaluate(lambda) * LhsPoleSum(kOne, 3, lambda));
  // deg f = n + 2.
  const unsigned long n = 2;
  const Polynomial g({1, 5, -3, 7, 2});
  const Rational fact(Factorial(n));
  EXPECT_EQ(CorrectionSum(g, n, lambda),
            fact * (g.coefficient(n + 1) +
                    g.coefficient(n + 2) * (Rational(n * (n + 1) / 2) + lambda)));
  EXPECT_EQ(MelzakGeneralRhs(g, n, lambda), LhsPoleSum(g, n, lambda));
  EXPECT_THROW(MelzakGeneralRhs(g, n, Rational(1)), PoleError);
  EXPECT_THROW(MelzakGeneralRhs(g, 0, Rational(5)), ArgumentError);
}

TEST(MelzakGeneral, AcceptsTruncatedSeries) {
  const TruncatedPowerSeries s(Polynomial({1, 1, R("1/2"), R("1/6"),
                                           R("1/24"), R("1/120")}),
                               5);
  EXPECT_EQ(MelzakGeneralRhs(s, 2, R("-1/3")), LhsPoleSum(s.poly(), 2, R("-1/3")));
  EXPECT_EQ(Corollary3Rhs(s, 2), Corollary3Lhs(s.poly(), 2));
}

TEST(PoleSumClosedForm, Examples) {
  const RationalFunction t0 = PoleSumClosedForm(0);
  EXPECT_EQ(t0, RationalFunction(Polynomial::Constant(-1),
                                 Polynomial::Monomial(1, 1)));
  EXPECT_EQ(PoleSumClosedForm(1).Evaluate(2), R("1/2"));
  EXPECT_EQ(PoleSumClosedForm(1).Evaluate(R("1/2")), Rational(-4));
  EXPECT_EQ(PoleSumClosedForm(1).Evaluate(R("1/2")),
            LhsPoleSum(kOne, 1, R("1/2")));
  EXPECT_THROW(PoleSumClosedForm(3).Evaluate(3), PoleError);
}

// Symbolic partial-fraction sum, built without PoleSumClosedForm.
RationalFunction SymbolicPoleSum(unsigned long n) {
  Polynomial all = Polynomial::Constant(1);
  for (unsigned long j = 0; j <= n; ++j) all *= Polynomial({Rational(j), -1});
  Polynomial numerator;
  for (unsigned long k = 0; k <= n; ++k) {
    Polynomial others = Polynomial::Constant(1);
    for (unsigned long j = 0; j <= n; ++j) {
      if (j != k) others *= Polynomial({Rational(j), -1});
    }
    Rational c(Binomial(n, static_cast<std::int64_t>(k)));
    if (k % 2 == 1) c = -c;
    numerator += others * c;
  }
  return RationalFunction(numerator, all);
}

TEST(PoleSumClosedForm, EqualsSymbolicPartialFractions) {
  for (unsigned long n = 0; n <= 8; ++n) {
    EXPECT_EQ(PoleSumClosedForm(n), SymbolicPoleSum(n)) << "n = " << n;
  }
}

TEST(SeriesTPartial, Examples) {
  EXPECT_EQ(SeriesTPartial(3, 5, 3), R("6/625"));
  // Leading term (-1)^(n+1) n! / lambda^(n+1).
  EXPECT_EQ(SeriesTPartial(4, R("-7/2"), 4),
            -Rational(Factorial(4)) / R("-7/2").Pow(5));
  // Geometric case: 1/2 - partial = 2^-(M+1).
  for (unsigned long m = 1; m <= 30; ++m) {
    EXPECT_EQ(R("1/2") - SeriesTPartial(1, 2, m), Rational(2).Pow(-static_cast<std::int64_t>(m) - 1));
  }
  EXPECT_THROW(SeriesTPartial(1, 0, 3), ZeroError);
  EXPECT_THROW(SeriesTPartial(3, 5, 2), ArgumentError);
  const auto partials = SeriesTPartialSums(2, 7, 10);
  ASSERT_EQ(partials.size(), 9U);
  EXPECT_EQ(partials.back(), SeriesTPartial(2, 7, 10));
}

TEST(SeriesTPartial, ConvergesMonotonicallyOutsideTheDisk) {
  const Rational closed = PoleSumClosedForm(3).Evaluate(5);
  const auto partials = SeriesTPartialSums(3, 5, 100);
  Rational previous = (partials.front() - closed).abs();
  for (std::size_t i = 1; i < partials.size(); ++i) {
    const Rational error = (partials[i] - closed).abs();
    EXPECT_LT(error, previous) << "M = " << 3 + i;
    previous = error;
  }
  EXPECT_LT(previous, Rational(BigInt(1), BigInt(1000000000)));
}

TEST(Corollary3, Examples) {
  for (unsigned long n = 1; n <= 8; ++n) {
    EXPECT_EQ(Corollary3Rhs(kOne, n), Harmonic(n));
    EXPECT_EQ(Corollary3Rhs(Polynomial({0, 1}), n), Rational(1));
    Rational expected(Factorial(n));
    if (n % 2 == 0) expected = -expected;
    EXPECT_EQ(Corollary3Rhs(Polynomial::Monomial(1, n + 1), n), expected);
  }
  EXPECT_EQ(Corollary3Lhs(Polynomial(), 4), Rational(0));
  EXPECT_EQ(Corollary3Lhs(kOne, 3), R("11/6"));
  EXPECT_THROW(Corollary3Rhs(kOne, 0), ArgumentError);
  EXPECT_THROW(Corollary3Lhs(kOne, 0), ArgumentError);
}

TEST(TwoPole, Examples) {
  EXPECT_EQ(TwoPoleRhs(kOne, 1, 0, 1, 2), R("1/3"));
  EXPECT_EQ(TwoPoleLhs(kOne, 1, 0, 1, 2), R("1/3"));
  const Polynomial f({1, -2, 3, 5});  // degree n + 1 for n = 2
  EXPECT_EQ(TwoPoleRhs(f, 2, R("1/2"), R("3/4"), R("-7/3")),
            TwoPoleRhs(f, 2, R("1/2"), R("-7/3"), R("3/4")));
  EXPECT_EQ(TwoPoleRhs(f, 2, R("1/2"), R("3/4"), R("-7/3")),
            TwoPoleLhs(f, 2, R("1/2"), R("3/4"), R("-7/3")));
  // The n! a_{n+1} terms of the two Gould forms cancel.
  EXPECT_EQ(TwoPoleRhs(f, 2, R("1/2"), R("3/4"), R("-7/3")),
            (MelzakGouldRhs(f, 2, R("1/2"), R("3/4")) -
             MelzakGouldRhs(f, 2, R("1/2"), R("-7/3"))) /
                (R("-7/3") - R("3/4")));
}

TEST(TwoPole, Errors) {
  EXPECT_THROW(TwoPoleRhs(Polynomial::Monomial(1, 3), 1, 0, 1, 2), DegreeError);
  EXPECT_THROW(TwoPoleRhs(kOne, 1, 0, 2, 2), DistinctnessError);
  EXPECT_THROW(TwoPoleRhs(kOne, 1, 0, -1, 2), PoleError);
  EXPECT_THROW(TwoPoleRhs(kOne, 1, 0, 1, 0), PoleError);
}

TEST(SecondOrder, Examples) {
  const Rational lambda = R("-5/2");
  const Polynomial c = Polynomial::Constant(R("3/7"));
  EXPECT_EQ(SecondOrderRhs(c, 3, lambda),
            R("3/7") * LhsPoleSum(kOne, 3, lambda, 2));
  EXPECT_EQ(SecondOrderRhs(Polynomial({0, 1}), 1, R("1/2")), Rational(-4));
  EXPECT_EQ(LhsPoleSum(Polynomial({0, 1}), 1, R("1/2"), 2), Rational(-4));
  EXPECT_EQ(SecondOrderRhs(kCube, 1, R("1/2")),
            LhsPoleSum(kCube, 1, R("1/2"), 2));
  EXPECT_THROW(SecondOrderRhs(kCube, 2, Rational(2)), PoleError);
}

TEST(HigherOrder, Examples) {
  const Polynomial g({1, 5, -3, 7, 2});
  EXPECT_EQ(HigherOrderRhs(g, 2, R("9/2"), 1), MelzakGeneralRhs(g, 2, R("9/2")));
  EXPECT_EQ(HigherOrderRhs(g, 2, R("9/2"), 2), SecondOrderRhs(g, 2, R("9/2")));
  // Frozen from a direct third-order sum: 1/(1/2)^3 - ... = -8.
  EXPECT_EQ(HigherOrderRhs(kCube, 1, R("1/2"), 3), Rational(-8));
  EXPECT_EQ(LhsPoleSum(kCube, 1, R("1/2"), 3), Rational(-8));
  // Frozen from an independent exact summation: f = 2 - 3t + t^5, n = 2.
  const Polynomial f({2, -3, 0, 0, 0, 1});
  EXPECT_EQ(HigherOrderRhs(f, 2, R("-7/3"), 4), R("10072350/68574961"));
  EXPECT_THROW(HigherOrderRhs(f, 2, R("-7/3"), 0), ArgumentError);
  EXPECT_THROW(HigherOrderRhs(f, 2, Rational(0), 2), PoleError);
}

TEST(BinomialTransform, IsAnInvolution) {
  TrialRng rng(8);
  std::vector<Rational> g;
  for (int i = 0; i < 13; ++i) g.push_back(testing::RandomRational(rng));
  const auto h = BinomialTransform(g);
  EXPECT_EQ(BinomialTransform(h), g);
  EXPECT_EQ(h[0], g[0]);
  EXPECT_EQ(h[1], g[0] - g[1]);
}

// Property suites over the random family: n in [1, 10], deg f <= n + 6,
// coefficients in [-9, 9], lambda = p/q with |p| <= 40, q <= 12.

TEST(Properties, MasterIdentity) {
  TrialRng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned long>(rng.UniformInt(1, 10));
    const Polynomial f = testing::RandomPolynomial(rng, n + 6);
    const Rational lambda = DrawLambda(rng, n);
    ASSERT_EQ(MelzakGeneralRhs(f, n, lambda), LhsPoleSum(f, n, lambda))
        << f.ToString() << " n=" << n << " lambda=" << lambda;
  }
}

TEST(Properties, ClassicXForm) {
  TrialRng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned long>(rng.UniformInt(0, 10));
    const Polynomial f = testing::RandomPolynomial(rng, n);
    const Rational x = testing::RandomRational(rng);
    const Rational y = DrawY(rng, n);
    const Polynomial g = f.ReflectShift(x);
    ASSERT_EQ(LhsPoleSum(g, n, -y), MelzakClassicRhs(f, n, x, y));
    ASSERT_EQ(ClassicLhs(f, n, x, y), MelzakClassicRhs(f, n, x, y));
    ASSERT_EQ(PartialFractionValue(n, y), LhsPoleSum(kOne, n, -y));
  }
}

TEST(Properties, GouldDegreeNPlusOne) {
  TrialRng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned long>(rng.UniformInt(0, 10));
    Polynomial f = testing::RandomPolynomial(rng, n) +
                   Polynomial::Monomial(rng.UniformInt(1, 9), n + 1);
    const Rational x = testing::RandomRational(rng);
    const Rational y = DrawY(rng, n);
    ASSERT_EQ(ClassicLhs(f, n, x, y), MelzakGouldRhs(f, n, x, y));
  }
}

TEST(Properties, Corollary3) {
  TrialRng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned long>(rng.UniformInt(1, 10));
    const Polynomial f = testing::RandomPolynomial(rng, n + 6);
    ASSERT_EQ(Corollary3Rhs(f, n), Corollary3Lhs(f, n));
  }
}

TEST(Properties, PoleOrders) {
  TrialRng rng(105);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<unsigned long>(rng.UniformInt(1, 10));
    const Polynomial f = testing::RandomPolynomial(rng, n + 6);
    const Rational lambda = DrawLambda(rng, n);
    for (unsigned r = 1; r <= 4; ++r) {
      ASSERT_EQ(HigherOrderRhs(f, n, lambda, r), LhsPoleSum(f, n, lambda, r));
    }
    ASSERT_EQ(SecondOrderRhs(f, n, lambda), HigherOrderRhs(f, n, lambda, 2));
  }
}

}  // namespace
}  // namespace melzak
