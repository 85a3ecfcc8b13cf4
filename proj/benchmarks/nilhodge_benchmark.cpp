#include <random>

#include <benchmark/benchmark.h>

#include "nilhodge/central_extension.hpp"
#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/minimal_model.hpp"

namespace {

using namespace nilhodge;

LieAlgebra complex_heisenberg() {
  auto v = [](std::size_t k, long c) {
    Vector out(6);
    out[k] = c;
    return out;
  };
  return LieAlgebra(StructureConstants(
      6, {"x1", "y1", "x2", "y2", "z1", "z2"},
      {{0, 1, v(4, 1)}, {2, 3, v(4, -1)}, {0, 3, v(5, 1)}, {1, 2, v(5, 1)}}));
}

// Heisenberg algebra of dimension 2g + 1.
LieAlgebra heisenberg(std::size_t g) {
  const std::size_t n = 2 * g + 1;
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < g; ++i) {
    Vector z(n);
    z[n - 1] = 1;
    entries.push_back({i, g + i, z});
  }
  return LieAlgebra(StructureConstants(n, {}, entries));
}

ExtensionDatum random_extension(std::mt19937& rng, std::size_t rank) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  Vector cl(binomial(rank, 2));
  for (auto& x : cl) x = Rational(num(rng), den(rng));
  return ExtensionDatum(rank, false, cl);
}

void BM_BettiComplexHeisenberg(benchmark::State& state) {
  const LieAlgebra l = complex_heisenberg();
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(l));
}
BENCHMARK(BM_BettiComplexHeisenberg)->Unit(benchmark::kMillisecond);

void BM_BettiHeisenberg(benchmark::State& state) {
  const LieAlgebra l = heisenberg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(l));
}
BENCHMARK(BM_BettiHeisenberg)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_FormalityComplexHeisenberg(benchmark::State& state) {
  const LieAlgebra l = complex_heisenberg();
  for (auto _ : state) benchmark::DoNotOptimize(is_one_formal(l));
}
BENCHMARK(BM_FormalityComplexHeisenberg)->Unit(benchmark::kMillisecond);

void BM_NomizuRandomExtension(benchmark::State& state) {
  std::mt19937 rng(1);
  const ExtensionDatum d = random_extension(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nomizu_crosscheck(d));
}
BENCHMARK(BM_NomizuRandomExtension)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_FreeTower(benchmark::State& state) {
  const std::size_t r = static_cast<std::size_t>(state.range(0));
  const CupData free(r, 0, Matrix(0, binomial(r, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(free, TowerOptions{4, {}}));
}
BENCHMARK(BM_FreeTower)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
