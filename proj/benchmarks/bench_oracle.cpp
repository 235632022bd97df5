#include <benchmark/benchmark.h>

#include "zeck/zeckendorf.hpp"

namespace {

void BM_decompose(benchmark::State& state) {
  zeck::Plrs fib = zeck::build_plrs({1, 1});
  zeck::Int m = zeck::parse_decimal("987654321987654321");
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::decompose(m, fib));
  }
}
BENCHMARK(BM_decompose);

void BM_enumerate_interval(benchmark::State& state) {
  zeck::Plrs fib = zeck::build_plrs({1, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::enumerate_interval(fib, n));
  }
  state.SetItemsProcessed(state.iterations() *
                          zeck::enumerate_interval(fib, n).omega.get_si());
}
BENCHMARK(BM_enumerate_interval)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace
