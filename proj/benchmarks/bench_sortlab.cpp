#include <benchmark/benchmark.h>

#include "sortlab/increments.hpp"
#include "sortlab/networks.hpp"
#include "sortlab/permutation.hpp"
#include "sortlab/rng.hpp"
#include "sortlab/shellsort.hpp"

namespace {

sortlab::Permutation input(std::size_t n) {
  sortlab::RandomStream rng(sortlab::Seed{42}, n, 0);
  return sortlab::random_permutation(n, rng);
}

void BM_CountInversions(benchmark::State& state) {
  const auto pi = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::count_inversions(pi));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountInversions)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void BM_LisLength(benchmark::State& state) {
  const auto pi = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::lis_length(pi));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LisLength)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void BM_ShellsortPratt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pi = input(n);
  const auto gaps = sortlab::pratt_sequence(n);
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::shellsort_stats(pi, gaps));
}
BENCHMARK(BM_ShellsortPratt)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

void BM_ShellsortTwoPass(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pi = input(n);
  const auto gaps = sortlab::two_pass_sequence(n);
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::shellsort_stats(pi, gaps));
}
BENCHMARK(BM_ShellsortTwoPass)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

// Includes the trace matrix, unlike shellsort_stats.
void BM_ShellsortTraced(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pi = input(n);
  const auto gaps = sortlab::pratt_sequence(n);
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::shellsort(pi, gaps));
}
BENCHMARK(BM_ShellsortTraced)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_ParallelStackSort(benchmark::State& state) {
  const auto pi = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sortlab::parallel_stack_sort(pi).devices_used);
}
BENCHMARK(BM_ParallelStackSort)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
