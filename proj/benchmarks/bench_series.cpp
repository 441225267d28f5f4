#include <benchmark/benchmark.h>

#include "pzeta/catalog.hpp"
#include "pzeta/moebius.hpp"
#include "pzeta/permgroup.hpp"

using namespace pzeta;

namespace {

PermGroup a5() {
  return close_generators(5, parse_generators("(1 2 3 4 5)\n(1 2 3)"));
}

DirichletSeries a5_series(Index bound) {
  return group_series(enumerate_subgroups(a5()), bound);
}

void BM_CloseGeneratorsA5(benchmark::State& state) {
  const auto gens = parse_generators("(1 2 3 4 5)\n(1 2 3)");
  for (auto _ : state)
    benchmark::DoNotOptimize(close_generators(5, gens).order());
}
BENCHMARK(BM_CloseGeneratorsA5);

void BM_EnumerateSubgroupsA5(benchmark::State& state) {
  const auto g = a5();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_subgroups(g).size());
}
BENCHMARK(BM_EnumerateSubgroupsA5);

void BM_MoebiusTableA5(benchmark::State& state) {
  const auto lattice = enumerate_subgroups(a5());
  for (auto _ : state)
    benchmark::DoNotOptimize(moebius_table(lattice).values.size());
}
BENCHMARK(BM_MoebiusTableA5);

void BM_MulSparse(benchmark::State& state) {
  const auto a = a5_series(3600);
  for (auto _ : state)
    benchmark::DoNotOptimize(mul(a, a).terms().size());
}
BENCHMARK(BM_MulSparse);

void BM_BostonCube(benchmark::State& state) {
  const auto base = a5_series(216000);
  for (auto _ : state)
    benchmark::DoNotOptimize(boston_power_series(base, 3, 120, 60).terms().size());
}
BENCHMARK(BM_BostonCube);

void BM_Invert50000(benchmark::State& state) {
  const auto series = recipe_series(example_50000_recipe(), 50000);
  for (auto _ : state)
    benchmark::DoNotOptimize(invert(series).terms().size());
}
BENCHMARK(BM_Invert50000);

void BM_InvertCube216000(benchmark::State& state) {
  const auto series = boston_power_series(a5_series(216000), 3, 120, 60);
  for (auto _ : state)
    benchmark::DoNotOptimize(invert(series).terms().size());
}
BENCHMARK(BM_InvertCube216000);

}  // namespace

BENCHMARK_MAIN();
