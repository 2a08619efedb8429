#include <benchmark/benchmark.h>

#include <cutpoly/ehrhart.hpp>
#include <cutpoly/graph.hpp>
#include <cutpoly/grobner.hpp>
#include <cutpoly/lattice.hpp>

using namespace cutpoly;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_LatticePoints(benchmark::State& state) {
  const CutConfiguration cfg(complete_bipartite(2, 3));
  const LatticeBasis basis = lattice_basis(cfg);
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(cfg, basis, m, mode(state)));
}

void BM_Semigroup(benchmark::State& state) {
  const CutConfiguration cfg(complete_bipartite(2, 3));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_counts(cfg, m, mode(state)));
}

void BM_Buchberger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_check(n, mode(state)).passed());
}

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_census(n, mode(state)).total);
}

}  // namespace

// First argument: 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_LatticePoints)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Semigroup)->ArgsProduct({{0, 1}, {6, 7}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Buchberger)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->ArgsProduct({{0, 1}, {6, 7}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
