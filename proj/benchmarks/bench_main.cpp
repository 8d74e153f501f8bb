// Microbenchmarks for the exact-arithmetic kernels; invariant-level
// benchmarks are added alongside their modules.
#include "twistfold/qsymbols.h"

#include <benchmark/benchmark.h>

namespace {

void BM_QuantumBinomial(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto b = twistfold::quantum_binomial(h, h / 2);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_QuantumBinomial)->Arg(8)->Arg(16)->Arg(32);

void BM_QLaurentMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  twistfold::QLaurent p = twistfold::quantum_factorial(n);
  for (auto _ : state) {
    auto r = p * p;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_QLaurentMultiply)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
