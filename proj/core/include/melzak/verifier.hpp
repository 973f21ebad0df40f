#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "melzak/polynomial.hpp"
#include "melzak/rational.hpp"

namespace melzak {

// Catalog of checked identities. The text keys (eq1, eq10, ...) are part of
// the CLI and JSONL contract.
enum class IdentityId {
  kEq1,
  kEq2,
  kEq8,
  kEq10,
  kEq12,
  kEq13,
  kEq17,
  kEq18,
  kHigherOrder,
  kEq4Eq5Inversion,
  kStirlingCrosscheck,
};

std::span<const IdentityId> AllIdentities();
std::string_view ToString(IdentityId id);
// ArgumentError on an unknown key.
IdentityId ParseIdentityId(std::string_view text);

// Parameters of one trial. Which fields are set depends on the identity.
struct TrialParams {
  std::optional<Polynomial> f;
  unsigned long n = 0;
  std::optional<Rational> lambda;
  std::optional<Rational> x;
  std::optional<Rational> y;
  std::optional<Rational> z;
  std::optional<unsigned> r;
  std::optional<unsigned long> p;

  // Set for randomly drawn trials.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trial;
};

// Ranges random trials are drawn from.
struct SuiteBounds {
  unsigned long n_min = 1;
  unsigned long n_max = 10;
  // deg f <= n + degree_extra where the identity allows any degree.
  unsigned long degree_extra = 6;
  long coefficient_bound = 9;
  // Rationals are p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound.
  long numerator_bound = 40;
  long denominator_bound = 12;
  // Pole order for higher_order; drawn from 1..4 when unset.
  std::optional<unsigned> r;
  // Largest p for stirling_crosscheck.
  unsigned long max_p = 25;
};

struct IdentityReport {
  IdentityId identity = IdentityId::kEq1;
  TrialParams params;
  Rational lhs;  // direct summation
  Rational rhs;  // closed form
  bool equal = false;
  std::int64_t elapsed_us = 0;
  // Named special case this report checks, empty for catalog trials.
  std::string fixture;
  std::string note;
};

struct VerifyOptions {
  // Adds 1 to the closed form; every trial must then fail.
  bool perturb_rhs = false;
  // Measure elapsed_us. Off by default so reports are reproducible.
  bool timing = false;
};

struct SuiteOptions : VerifyOptions {
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// Portable seeded generator. Integers are drawn by rejection from the raw
// 64-bit output, never through std::uniform_int_distribution, so a seed
// yields the same trials on every standard library.
class TrialRng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Draws parameters satisfying the identity's preconditions. Gives up with
// ArgumentError after 1000 rejected draws of one quantity.
TrialParams DrawParams(IdentityId id, TrialRng& rng, const SuiteBounds& bounds);

// Evaluates the direct sum and the closed form for one trial. Pole, degree
// and distinctness errors propagate with the identity key as context.
IdentityReport VerifyIdentity(IdentityId id, const TrialParams& params,
                              const VerifyOptions& options = {});

// `trials` reports in draw order; deterministic in the seed.
std::vector<IdentityReport> RandomSuite(IdentityId id, std::uint64_t seed,
                                        std::size_t trials,
                                        const SuiteBounds& bounds = {},
                                        const SuiteOptions& options = {});

// Named special cases: 1/(n+1), n/(n+1), the reciprocal-binomial pair and
// its inverse, the harmonic-number form for deg f <= n, and the vanishing
// and n! alternating power sums.
std::vector<IdentityReport> FixtureSuite();

// One JSON object, no trailing newline.
std::string ToJsonLine(const IdentityReport& report);

bool AllEqual(std::span<const IdentityReport> reports);

}  // namespace melzak
