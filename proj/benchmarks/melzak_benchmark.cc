#include <benchmark/benchmark.h>

#include "melzak/combinatorics.hpp"
#include "melzak/transforms.hpp"
#include "melzak/verifier.hpp"

namespace {

using melzak::Polynomial;
using melzak::Rational;

Polynomial BenchPolynomial(std::size_t degree) {
  melzak::TrialRng rng(1);
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = Rational(rng.UniformInt(-9, 9));
  c.back() = Rational(1);
  return Polynomial(std::move(c));
}

const Rational kX(melzak::BigInt(1), melzak::BigInt(2));
const Rational kY(melzak::BigInt(2), melzak::BigInt(3));

void BM_ClassicDirectSum(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const Polynomial f = BenchPolynomial(std::min<std::size_t>(n, 100));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzak::ClassicLhs(f, n, kX, kY));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassicDirectSum)
    ->RangeMultiplier(4)
    ->Range(16, 2048)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity();

void BM_ClassicClosedForm(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const Polynomial f = BenchPolynomial(std::min<std::size_t>(n, 100));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzak::MelzakClassicRhs(f, n, kX, kY));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassicClosedForm)
    ->RangeMultiplier(4)
    ->Range(16, 2048)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity();

void BM_GeneralClosedForm(benchmark::State& state) {
  const unsigned long n = 10;
  const Polynomial f = BenchPolynomial(static_cast<std::size_t>(state.range(0)));
  const Rational lambda(melzak::BigInt(-17), melzak::BigInt(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzak::MelzakGeneralRhs(f, n, lambda));
  }
}
BENCHMARK(BM_GeneralClosedForm)->Arg(8)->Arg(16)->Arg(64)->Arg(256);

void BM_HigherOrder(benchmark::State& state) {
  const Polynomial f = BenchPolynomial(16);
  const Rational lambda(melzak::BigInt(-17), melzak::BigInt(5));
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzak::HigherOrderRhs(f, 10, lambda, r));
  }
}
BENCHMARK(BM_HigherOrder)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_StirlingTable(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    melzak::StirlingTable table(size, size);
    benchmark::DoNotOptimize(table(size, size / 2));
  }
}
BENCHMARK(BM_StirlingTable)->Arg(25)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Stirling2Alternating(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzak::Stirling2Alternating(p, p / 2));
  }
}
BENCHMARK(BM_Stirling2Alternating)->Arg(25)->Arg(100)->Arg(200);

void BM_RandomSuite(benchmark::State& state) {
  melzak::SuiteOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        melzak::RandomSuite(melzak::IdentityId::kEq10, 42, 100, {}, options));
  }
}
BENCHMARK(BM_RandomSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
