#include <benchmark/benchmark.h>

#include <fiblcm/fibonacci.hpp>
#include <fiblcm/lcm_oracle.hpp>
#include <fiblcm/primitive_parts.hpp>
#include <fiblcm/progression_cover.hpp>
#include <fiblcm/sign_patterns.hpp>
#include <fiblcm/totient_sums.hpp>

using namespace fiblcm;

static void BM_FibDoubling(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fib(n));
}
BENCHMARK(BM_FibDoubling)->Range(1 << 10, 1 << 20);

static void BM_PhiTable(benchmark::State& state) {
  long bound = state.range(0);
  for (auto _ : state) {
    PhiTable table(bound);
    benchmark::DoNotOptimize(table.value(bound));
  }
}
BENCHMARK(BM_PhiTable)->Arg(500)->Arg(2000)->Arg(4000)
    ->Unit(benchmark::kMillisecond);

static void BM_LcmSequential(benchmark::State& state) {
  SignPattern p = parse_pattern("----+");
  auto terms = shifted_terms(p, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcm_reduce_sequential(terms));
}
BENCHMARK(BM_LcmSequential)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

static void BM_LcmTree(benchmark::State& state) {
  SignPattern p = parse_pattern("----+");
  auto terms = shifted_terms(p, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcm_reduce_tree(terms));
}
BENCHMARK(BM_LcmTree)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

static void BM_TotientSieve(benchmark::State& state) {
  std::size_t limit = state.range(0);
  for (auto _ : state) {
    TotientSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.phi(limit));
  }
}
BENCHMARK(BM_TotientSieve)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

static void BM_PatternConstant(benchmark::State& state) {
  // Alternating pattern of the requested period.
  std::string text;
  for (long i = 0; i < state.range(0); ++i)
    text.push_back(i % 2 == 0 ? '-' : '+');
  SignPattern p = parse_pattern(text);
  for (auto _ : state) benchmark::DoNotOptimize(pattern_constant(p));
}
BENCHMARK(BM_PatternConstant)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

static void BM_LogBig(benchmark::State& state) {
  mpz_class x = fib(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_big(x));
}
BENCHMARK(BM_LogBig)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
