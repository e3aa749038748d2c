#include <benchmark/benchmark.h>

#include "weylmod/basisenum.hpp"
#include "weylmod/charring.hpp"
#include "weylmod/fusion.hpp"

using namespace weylmod;

namespace {

DominantWeight uniform(int rank, Coord m) { return DominantWeight(std::vector<Coord>(static_cast<std::size_t>(rank), m)); }

void BM_BasisCount(benchmark::State& state) {
  const DominantWeight lambda = uniform(static_cast<int>(state.range(0)), state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  std::uint64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(n = BasisEnumerator(lambda).count(threads));
  state.counters["elements"] = static_cast<double>(n);
  state.counters["rate"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_BasisCount)->Args({2, 2, 1})->Args({3, 1, 1})->Args({3, 2, 1})->Args({3, 2, 2})->Args({4, 1, 1})
    ->Unit(benchmark::kMillisecond);

void BM_CharacterFromBasis(benchmark::State& state) {
  const DominantWeight lambda = uniform(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(character_from_basis(lambda));
}
BENCHMARK(BM_CharacterFromBasis)->Args({2, 2})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_FermionicCharacter(benchmark::State& state) {
  const DominantWeight lambda = uniform(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fermionic_character(lambda));
}
BENCHMARK(BM_FermionicCharacter)->Args({2, 2})->Args({3, 1})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_KostkaDecomposition(benchmark::State& state) {
  const DominantWeight lambda = uniform(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_kostka(lambda));
}
BENCHMARK(BM_KostkaDecomposition)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_FusionClosure(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  std::vector<int> indices;
  for (int i = 1; i <= rank; ++i) indices.push_back(i);
  if (state.range(1)) indices.push_back(1);
  std::vector<Coord> points(indices.size());
  for (std::size_t k = 0; k < points.size(); ++k) points[k] = static_cast<Coord>(k);
  const auto factors = make_factors(rank, indices, points);
  for (auto _ : state) benchmark::DoNotOptimize(fusion_graded_character(factors));
  state.counters["ambient"] = static_cast<double>(ambient_dim(factors));
}
BENCHMARK(BM_FusionClosure)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
