// Microbenchmarks for the hot paths: setwise products, minimal
// factorization search, and the census pipeline.
#include <benchmark/benchmark.h>

#include <vector>

#include "powmon/census.hpp"
#include "powmon/classify.hpp"
#include "powmon/fixtures.hpp"
#include "powmon/power.hpp"

using namespace powmon;

namespace {

void BM_pmul(benchmark::State& state) {
  FiniteMonoid h = fixtures::h2();
  std::vector<PSet> sets = all_psets(h);
  std::size_t i = 0, j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmul(h, sets[i], sets[j]));
    if (++j == sets.size()) {
      j = 0;
      if (++i == sets.size()) i = 0;
    }
  }
}
BENCHMARK(BM_pmul);

void BM_minimal_factorizations_cyclic(benchmark::State& state) {
  FiniteMonoid h = fixtures::z5();
  PSet x{h.all_mask()};
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_factorizations(h, x));
}
BENCHMARK(BM_minimal_factorizations_cyclic);

void BM_minimal_factorizations_idempotent(benchmark::State& state) {
  FiniteMonoid h = fixtures::h2();
  PSet x{h.all_mask()};
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_factorizations(h, x));
}
BENCHMARK(BM_minimal_factorizations_idempotent);

void BM_umf_brute(benchmark::State& state) {
  FiniteMonoid h = fixtures::h2();
  for (auto _ : state) benchmark::DoNotOptimize(pm_is_umf_brute(h));
}
BENCHMARK(BM_umf_brute);

void BM_enumerate_order(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_monoids(n, false, [&](const FiniteMonoid&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_order)->Arg(4)->Arg(5);

void BM_census(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(n));
}
BENCHMARK(BM_census)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
