#include <benchmark/benchmark.h>

#include "transfersys/enumerator.hpp"
#include "transfersys/lattice_source.hpp"

namespace ts = transfersys;

static void BM_CountChain(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("cyclic:p^" + std::to_string(state.range(0)));
  const ts::ArrowTables t(L);
  for (auto _ : state) benchmark::DoNotOptimize(ts::count(t));
}
BENCHMARK(BM_CountChain)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CountGrid(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("cyclic:p^" + std::to_string(state.range(0)) + "*q");
  const ts::ArrowTables t(L);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ts::count(t, jobs));
}
BENCHMARK(BM_CountGrid)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_CountBoolean3(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("boolean:3");
  const ts::ArrowTables t(L);
  for (auto _ : state) benchmark::DoNotOptimize(ts::count(t));
}
BENCHMARK(BM_CountBoolean3)->Unit(benchmark::kMillisecond);
