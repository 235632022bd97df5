#include <benchmark/benchmark.h>

#include "zeck/asymptotics.hpp"
#include "zeck/engine.hpp"
#include "zeck/tables.hpp"

namespace {

void BM_evolve_gap2(benchmark::State& state) {
  zeck::Plrs fib = zeck::build_plrs({1, 1});
  zeck::CoefficientTable t = zeck::build_gap_table(fib, 2);
  zeck::RowTable seeds = zeck::oracle_seed_rows(t, fib);
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::evolve(t, seeds, target));
  }
}
BENCHMARK(BM_evolve_gap2)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_moments_recursive(benchmark::State& state) {
  zeck::Plrs fib = zeck::build_plrs({1, 1});
  zeck::CoefficientTable t = zeck::build_gap_table(fib, 2);
  zeck::RowTable rows = zeck::evolve(t, zeck::oracle_seed_rows(t, fib), 300);
  zeck::RecursiveOptions opts;
  opts.verify_against_direct = false;
  opts.with_ks = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::moments_recursive(t, rows, 6, 300, opts));
  }
}
BENCHMARK(BM_moments_recursive)->Unit(benchmark::kMillisecond);

void BM_moments_direct(benchmark::State& state) {
  zeck::Plrs fib = zeck::build_plrs({1, 1});
  zeck::CoefficientTable t = zeck::build_summand_table(fib);
  zeck::RowTable rows = zeck::evolve(t, zeck::oracle_seed_rows(t, fib), 300);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::moments_direct(rows, 300, 6));
  }
}
BENCHMARK(BM_moments_direct);

}  // namespace
