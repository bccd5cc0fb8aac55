#include <benchmark/benchmark.h>

#include "transfersys/basis.hpp"
#include "transfersys/enumerator.hpp"
#include "transfersys/lattice_source.hpp"

namespace ts = transfersys;

static void BM_MinimalBasisAll(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("cyclic:p^" + std::to_string(state.range(0)) + "*q");
  const ts::ArrowTables t(L);
  ts::EnumerateOptions opts;
  opts.store = true;
  const auto systems = ts::enumerate(t, opts).systems;
  for (auto _ : state)
    for (const auto& s : systems) benchmark::DoNotOptimize(ts::basis_size(t, s.arrows));
  state.counters["systems"] = static_cast<double>(systems.size());
}
BENCHMARK(BM_MinimalBasisAll)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Complexity(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("cyclic:p^2*q^2");
  const ts::ArrowTables t(L);
  for (auto _ : state) benchmark::DoNotOptimize(ts::complexity(t, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Complexity)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Width(benchmark::State& state) {
  const ts::GroupLattice L = ts::parse_builtin_lattice("boolean:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ts::width(L));
}
BENCHMARK(BM_Width)->DenseRange(4, 8, 2);
