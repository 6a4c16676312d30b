#include <benchmark/benchmark.h>

#include "rlw/dimacs.hpp"
#include "rlw/embedding.hpp"
#include "rlw/extremal.hpp"
#include "rlw/search.hpp"

using namespace rlw;

namespace {

AvoidanceSpec spec_of(int n, const PatternPoset& q, const PatternPoset& p, Palette pal) {
  AvoidanceSpec s;
  s.n = n;
  s.rainbow_target = q;
  s.mono_target = p;
  s.palette = pal;
  return s;
}

void BM_InducedCopy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FamilyMask host = levels(n, 1, n - 1);
  const auto p = PatternPoset::boolean(2);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced_copy(n, host, p));
}
BENCHMARK(BM_InducedCopy)->DenseRange(4, 10, 2);

void BM_CopyImages(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(copy_images(n, FamilyMask::all(n), PatternPoset::boolean(2), CopyMode::Induced));
}
BENCHMARK(BM_CopyImages)->DenseRange(3, 6);

void BM_ExistsForkChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = spec_of(n, PatternPoset::fork(), PatternPoset::chain(4), Palette::exact(4));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = exists_coloring(spec);
    nodes = r.stats.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExistsForkChain)->DenseRange(3, 5);

void BM_SymmetryOnOff(benchmark::State& state) {
  const auto spec = spec_of(3, PatternPoset::boolean(2), PatternPoset::chain(3), Palette::exact(4));
  SearchOptions o;
  o.ground_symmetry = state.range(0) != 0;
  std::uint64_t visited = 0;
  for (auto _ : state) {
    visited = for_each_coloring(spec, [](const Coloring&) { return true; }, o).visited;
  }
  state.counters["visited"] = static_cast<double>(visited);
}
BENCHMARK(BM_SymmetryOnOff)->Arg(0)->Arg(1);

void BM_ComputeGr(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_gr(PatternPoset::chain(3), PatternPoset::chain(4), 3, {1, 5}));
}
BENCHMARK(BM_ComputeGr)->Unit(benchmark::kMillisecond);

void BM_LuMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lu_max(n, PatternPoset::fork()));
}
BENCHMARK(BM_LuMax)->DenseRange(2, 4);

void BM_SolveCnf(benchmark::State& state) {
  const auto cnf = export_dimacs(spec_of(2, PatternPoset::boolean(2), PatternPoset::chain(2), Palette::exact(3)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_cnf(cnf));
}
BENCHMARK(BM_SolveCnf);

}  // namespace

BENCHMARK_MAIN();
