#include "melzak/verifier.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "json.hpp"

#include "melzak/combinatorics.hpp"
#include "melzak/errors.hpp"
#include "melzak/transforms.hpp"

namespace melzak {
namespace {

struct CatalogEntry {
  IdentityId id;
  std::string_view key;
};

constexpr std::array<CatalogEntry, 11> kCatalog = {{
    {IdentityId::kEq1, "eq1"},
    {IdentityId::kEq2, "eq2"},
    {IdentityId::kEq8, "eq8"},
    {IdentityId::kEq10, "eq10"},
    {IdentityId::kEq12, "eq12"},
    {IdentityId::kEq13, "eq13"},
    {IdentityId::kEq17, "eq17"},
    {IdentityId::kEq18, "eq18"},
    {IdentityId::kHigherOrder, "higher_order"},
    {IdentityId::kEq4Eq5Inversion, "eq4_eq5_inversion"},
    {IdentityId::kStirlingCrosscheck, "stirling_crosscheck"},
}};

constexpr std::array<IdentityId, 11> kAllIds = {
    IdentityId::kEq1,         IdentityId::kEq2,
    IdentityId::kEq8,         IdentityId::kEq10,
    IdentityId::kEq12,        IdentityId::kEq13,
    IdentityId::kEq17,        IdentityId::kEq18,
    IdentityId::kHigherOrder, IdentityId::kEq4Eq5Inversion,
    IdentityId::kStirlingCrosscheck,
};

constexpr std::string_view kInversionNote =
    "closed form y/(y+n); the printed right-hand side y/(y+k) leaves k "
    "unbound and is not used";

constexpr int kMaxRedraws = 1000;

const Polynomial& One() {
  static const Polynomial one = Polynomial::Constant(1);
  return one;
}

template <typename T>
const T& Require(const std::optional<T>& value, std::string_view name,
                 IdentityId id) {
  if (!value) {
    throw ArgumentError(std::string(ToString(id)) + " needs parameter " +
                        std::string(name));
  }
  return *value;
}

Rational DrawRational(TrialRng& rng, const SuiteBounds& b) {
  const auto p = rng.UniformInt(-b.numerator_bound, b.numerator_bound);
  const auto q = rng.UniformInt(1, b.denominator_bound);
  return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
}

template <typename Accept>
Rational DrawRationalWhere(TrialRng& rng, const SuiteBounds& b,
                           std::string_view what, Accept&& accept) {
  for (int i = 0; i < kMaxRedraws; ++i) {
    Rational value = DrawRational(rng, b);
    if (accept(value)) return value;
  }
  throw ArgumentError("no admissible " + std::string(what) + " after " +
                      std::to_string(kMaxRedraws) + " draws");
}

// Random polynomial with degree <= max_degree; when exact, the coefficient of
// t^max_degree is nonzero.
Polynomial DrawPolynomial(TrialRng& rng, const SuiteBounds& b,
                          unsigned long max_degree, bool exact) {
  const auto degree =
      exact ? static_cast<std::int64_t>(max_degree)
            : rng.UniformInt(0, static_cast<std::int64_t>(max_degree));
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& coefficient : c) {
    coefficient = Rational(
        rng.UniformInt(-b.coefficient_bound, b.coefficient_bound));
  }
  if (exact) {
    if (b.coefficient_bound < 1) {
      throw ArgumentError("coefficient bound must be >= 1");
    }
    for (int i = 0; c.back().is_zero(); ++i) {
      if (i == kMaxRedraws) throw ArgumentError("no nonzero leading coefficient");
      c.back() = Rational(
          rng.UniformInt(-b.coefficient_bound, b.coefficient_bound));
    }
  }
  return Polynomial(std::move(c));
}

bool IsNegativePole(const Rational& y, unsigned long n) {
  return IsIndexInRange(-y, n);
}

Rational ReciprocalBinomialSum(unsigned long n, const Rational& y) {
  Rational sum;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational term = Rational(Binomial(n, static_cast<std::int64_t>(k))) /
                    GeneralizedBinomial(Rational(k) + y, k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

void Evaluate(IdentityId id, const TrialParams& p, Rational& lhs,
              Rational& rhs) {
  switch (id) {
    case IdentityId::kEq1:
    case IdentityId::kEq2: {
      const Polynomial& f = Require(p.f, "f", id);
      const Rational x = p.x.value_or(Rational());
      const Rational& y = Require(p.y, "y", id);
      rhs = id == IdentityId::kEq1 ? MelzakClassicRhs(f, p.n, x, y)
                                   : MelzakGouldRhs(f, p.n, x, y);
      lhs = LhsPoleSum(f.ReflectShift(x), p.n, -y, 1);
      return;
    }
    case IdentityId::kEq8: {
      const Rational& y = Require(p.y, "y", id);
      rhs = PartialFractionValue(p.n, y);
      lhs = LhsPoleSum(One(), p.n, -y, 1);
      return;
    }
    case IdentityId::kEq10: {
      const Polynomial& f = Require(p.f, "f", id);
      const Rational& lambda = Require(p.lambda, "lambda", id);
      rhs = MelzakGeneralRhs(f, p.n, lambda);
      lhs = LhsPoleSum(f, p.n, lambda, 1);
      return;
    }
    case IdentityId::kEq12: {
      const Rational& lambda = Require(p.lambda, "lambda", id);
      RequireNotPole(lambda, p.n);
      rhs = PoleSumClosedForm(p.n).Evaluate(lambda);
      lhs = LhsPoleSum(One(), p.n, lambda, 1);
      return;
    }
    case IdentityId::kEq13: {
      const Polynomial& f = Require(p.f, "f", id);
      rhs = Corollary3Rhs(f, p.n);
      lhs = Corollary3Lhs(f, p.n);
      return;
    }
    case IdentityId::kEq17: {
      const Polynomial& f = Require(p.f, "f", id);
      const Rational x = p.x.value_or(Rational());
      const Rational& y = Require(p.y, "y", id);
      const Rational& z = Require(p.z, "z", id);
      rhs = TwoPoleRhs(f, p.n, x, y, z);
      lhs = TwoPoleLhs(f, p.n, x, y, z);
      return;
    }
    case IdentityId::kEq18: {
      const Polynomial& f = Require(p.f, "f", id);
      const Rational& lambda = Require(p.lambda, "lambda", id);
      rhs = SecondOrderRhs(f, p.n, lambda);
      lhs = LhsPoleSum(f, p.n, lambda, 2);
      return;
    }
    case IdentityId::kHigherOrder: {
      const Polynomial& f = Require(p.f, "f", id);
      const Rational& lambda = Require(p.lambda, "lambda", id);
      const unsigned r = p.r.value_or(1);
      rhs = HigherOrderRhs(f, p.n, lambda, r);
      lhs = LhsPoleSum(f, p.n, lambda, r);
      return;
    }
    case IdentityId::kEq4Eq5Inversion: {
      const Rational& y = Require(p.y, "y", id);
      RequireNotNegativePole(y, p.n);
      rhs = y / (y + Rational(p.n));
      lhs = ReciprocalBinomialSum(p.n, y);
      return;
    }
    case IdentityId::kStirlingCrosscheck: {
      const unsigned long power = Require(p.p, "p", id);
      rhs = Rational(Stirling2(power, p.n));
      lhs = Rational(Stirling2Alternating(power, p.n));
      return;
    }
  }
  throw InternalError("identity not wired");
}

IdentityReport MakeFixture(IdentityId id, std::string fixture,
                           TrialParams params, Rational lhs, Rational rhs) {
  IdentityReport report;
  report.identity = id;
  report.fixture = std::move(fixture);
  report.params = std::move(params);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.equal = report.lhs == report.rhs;
  if (id == IdentityId::kEq4Eq5Inversion) report.note = kInversionNote;
  return report;
}

}  // namespace

std::span<const IdentityId> AllIdentities() { return kAllIds; }

std::string_view ToString(IdentityId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry.key;
  }
  return "unknown";
}

IdentityId ParseIdentityId(std::string_view text) {
  for (const auto& entry : kCatalog) {
    if (entry.key == text) return entry.id;
  }
  throw ArgumentError("unknown identity '" + std::string(text) + "'");
}

std::int64_t TrialRng::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ArgumentError("empty integer range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    const std::uint64_t draw = engine_();
    if (draw >= threshold) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                       draw % range);
    }
  }
}

TrialParams DrawParams(IdentityId id, TrialRng& rng,
                       const SuiteBounds& b) {
  if (b.n_max < b.n_min) throw ArgumentError("n_max < n_min");
  TrialParams p;
  auto draw_n = [&](unsigned long floor) {
    const auto lo = std::max(b.n_min, floor);
    if (b.n_max < lo) throw ArgumentError("n range excludes n >= 1");
    return static_cast<unsigned long>(rng.UniformInt(
        static_cast<std::int64_t>(lo), static_cast<std::int64_t>(b.n_max)));
  };
  auto draw_lambda = [&] {
    return DrawRationalWhere(rng, b, "lambda", [&](const Rational& v) {
      return !IsIndexInRange(v, p.n);
    });
  };
  auto draw_y = [&](std::string_view name) {
    return DrawRationalWhere(rng, b, name, [&](const Rational& v) {
      return !IsNegativePole(v, p.n) && (!p.y || v != *p.y);
    });
  };

  switch (id) {
    case IdentityId::kEq1:
    case IdentityId::kEq2:
      p.n = draw_n(0);
      p.f = DrawPolynomial(rng, b, id == IdentityId::kEq1 ? p.n : p.n + 1,
                           id == IdentityId::kEq2);
      p.x = DrawRational(rng, b);
      p.y = draw_y("y");
      break;
    case IdentityId::kEq8:
    case IdentityId::kEq4Eq5Inversion:
      p.n = draw_n(0);
      p.y = draw_y("y");
      break;
    case IdentityId::kEq10:
    case IdentityId::kEq18:
    case IdentityId::kHigherOrder:
      p.n = draw_n(1);
      p.f = DrawPolynomial(rng, b, p.n + b.degree_extra, false);
      p.lambda = draw_lambda();
      if (id == IdentityId::kHigherOrder) {
        p.r = b.r ? *b.r : static_cast<unsigned>(rng.UniformInt(1, 4));
      }
      break;
    case IdentityId::kEq12:
      p.n = draw_n(0);
      p.lambda = draw_lambda();
      break;
    case IdentityId::kEq13:
      p.n = draw_n(1);
      p.f = DrawPolynomial(rng, b, p.n + b.degree_extra, false);
      break;
    case IdentityId::kEq17:
      p.n = draw_n(0);
      p.f = DrawPolynomial(rng, b, p.n + 1, false);
      p.x = DrawRational(rng, b);
      p.y = draw_y("y");
      p.z = draw_y("z");
      break;
    case IdentityId::kStirlingCrosscheck:
      p.n = static_cast<unsigned long>(
          rng.UniformInt(0, static_cast<std::int64_t>(b.max_p)));
      p.p = static_cast<unsigned long>(
          rng.UniformInt(static_cast<std::int64_t>(p.n),
                         static_cast<std::int64_t>(b.max_p)));
      break;
  }
  return p;
}

IdentityReport VerifyIdentity(IdentityId id, const TrialParams& params,
                              const VerifyOptions& options) {
  IdentityReport report;
  report.identity = id;
  report.params = params;
  if (id == IdentityId::kEq4Eq5Inversion) report.note = kInversionNote;

  const auto start = std::chrono::steady_clock::now();
  try {
    Evaluate(id, params, report.lhs, report.rhs);
  } catch (Error& e) {
    if (e.context().empty()) e.set_context(std::string(ToString(id)));
    throw;
  }
  if (options.timing) {
    report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  if (options.perturb_rhs) report.rhs += Rational(1);
  report.equal = report.lhs == report.rhs;
  return report;
}

std::vector<IdentityReport> RandomSuite(IdentityId id, std::uint64_t seed,
                                        std::size_t trials,
                                        const SuiteBounds& bounds,
                                        const SuiteOptions& options) {
  if (trials == 0) throw ArgumentError("trials must be >= 1");
  // Parameters are drawn sequentially so the trial list depends only on the
  // seed; evaluation order is free.
  TrialRng rng(seed);
  std::vector<TrialParams> params;
  params.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    TrialParams p = DrawParams(id, rng, bounds);
    p.seed = seed;
    p.trial = i;
    params.push_back(std::move(p));
  }

  std::vector<IdentityReport> reports(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        reports[i] = VerifyIdentity(id, params[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads =
      options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return reports;
}

std::vector<IdentityReport> FixtureSuite() {
  std::vector<IdentityReport> out;
  const Polynomial one = Polynomial::Constant(1);

  // f = 1 specializations: n!/(y)_(n+1) = (1/y) C(n+y, n)^-1.
  for (const Rational& y : {Rational(1, 2), Rational(3), Rational(7, 3)}) {
    for (unsigned long n = 1; n <= 10; ++n) {
      TrialParams p;
      p.n = n;
      p.y = y;
      p.f = one;
      out.push_back(MakeFixture(
          IdentityId::kEq1, "eq3", p, ClassicLhs(one, n, Rational(), y),
          y.Reciprocal() / GeneralizedBinomial(Rational(n) + y, n)));
    }
  }
  for (unsigned long n = 1; n <= 10; ++n) {
    TrialParams p;
    p.n = n;
    p.y = Rational(1);
    p.f = one;
    out.push_back(MakeFixture(IdentityId::kEq1, "eq6", p,
                              LhsPoleSum(one, n, Rational(-1)),
                              Rational(BigInt(1), BigInt(n + 1))));
  }
  // Starting at k = 1: drop the k = 0 term (which is 1) and flip the sign.
  for (unsigned long n = 1; n <= 10; ++n) {
    TrialParams p;
    p.n = n;
    p.y = Rational(1);
    p.f = one;
    out.push_back(MakeFixture(IdentityId::kEq1, "eq7", p,
                              Rational(1) - LhsPoleSum(one, n, Rational(-1)),
                              Rational(BigInt(n), BigInt(n + 1))));
  }
  // y/(y+k) transforms to C(n+y, n)^-1, and back.
  for (const Rational& y : {Rational(1, 2), Rational(2), Rational(-5, 3)}) {
    for (unsigned long n = 0; n <= 12; ++n) {
      TrialParams p;
      p.n = n;
      p.y = y;
      out.push_back(MakeFixture(
          IdentityId::kEq4Eq5Inversion, "eq4", p,
          LhsPoleSum(Polynomial::Constant(y), n, -y),
          GeneralizedBinomial(Rational(n) + y, n).Reciprocal()));
      out.push_back(MakeFixture(IdentityId::kEq4Eq5Inversion, "eq5", p,
                                ReciprocalBinomialSum(n, y),
                                y / (y + Rational(n))));
    }
  }
  // deg f <= n: f'(0) + f(0) H_n.
  for (unsigned long n = 1; n <= 10; ++n) {
    std::vector<Polynomial> samples = {
        one, Polynomial({0, 1}), Polynomial({3, -2, 5}),
        Polynomial::Monomial(1, n),
        Polynomial({Rational(-7, 2), Rational(1, 3), 0, 4})};
    for (const Polynomial& f : samples) {
      if (f.degree() > n) continue;
      TrialParams p;
      p.n = n;
      p.f = f;
      out.push_back(MakeFixture(
          IdentityId::kEq13, "eq14", p, Corollary3Lhs(f, n),
          f.coefficient(1) + f.coefficient(0) * Harmonic(n)));
    }
  }
  // Alternating power sums: zero for 1 <= p < n, (-1)^(n-1) n! at p = n.
  for (unsigned long n = 1; n <= 12; ++n) {
    for (unsigned long power = 1; power < n; ++power) {
      TrialParams p;
      p.n = n;
      p.p = power;
      out.push_back(MakeFixture(IdentityId::kStirlingCrosscheck, "eq15", p,
                                Rational(AlternatingPowerSum(n, power)),
                                Rational()));
    }
    TrialParams p;
    p.n = n;
    p.p = n;
    Rational expected(Factorial(n));
    if (n % 2 == 0) expected = -expected;
    out.push_back(MakeFixture(IdentityId::kStirlingCrosscheck, "eq16", p,
                              Rational(AlternatingPowerSum(n, n)), expected));
  }
  return out;
}

std::string ToJsonLine(const IdentityReport& report) {
  const TrialParams& p = report.params;
  nlohmann::ordered_json params;
  params["n"] = p.n;
  if (p.f) params["poly"] = p.f->ToString();
  if (p.lambda) params["lambda"] = p.lambda->ToString();
  if (p.x) params["x"] = p.x->ToString();
  if (p.y) params["y"] = p.y->ToString();
  if (p.z) params["z"] = p.z->ToString();
  if (p.r) params["r"] = *p.r;
  if (p.p) params["p"] = *p.p;
  if (p.seed) {
    params["rng"] = TrialRng::kName;
    params["seed"] = *p.seed;
  }
  if (p.trial) params["trial"] = *p.trial;

  nlohmann::ordered_json j;
  j["identity"] = ToString(report.identity);
  if (!report.fixture.empty()) j["fixture"] = report.fixture;
  j["params"] = std::move(params);
  j["lhs"] = report.lhs.ToString();
  j["rhs"] = report.rhs.ToString();
  j["equal"] = report.equal;
  j["elapsed_us"] = report.elapsed_us;
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump();
}

bool AllEqual(std::span<const IdentityReport> reports) {
  for (const auto& r : reports) {
    if (!r.equal) return false;
  }
  return true;
}

}  // namespace melzak
