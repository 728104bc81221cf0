#include <random>

#include <benchmark/benchmark.h>

#include "gchar/catalog.hpp"
#include "gchar/gdimension.hpp"
#include "gchar/linalg.hpp"
#include "gchar/resolution.hpp"
#include "gchar/series.hpp"

using namespace gchar;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField f(13);
  std::mt19937_64 rng(1);
  Matrix a(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Scalar>(rng() % 13);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256);

static void BM_ResolveResidueField(benchmark::State& state) {
  CatalogEntry e = build("quadric3");
  const int stages = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Resolution r(residue_field(e.ring), kDefaultDmax);
    r.extend_to(stages);
    benchmark::DoNotOptimize(r.beta(stages));
  }
}
BENCHMARK(BM_ResolveResidueField)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_ChiG(benchmark::State& state) {
  CatalogEntry e = build("hypersurface-dim1");
  const GradedModule& m = e.module("R_m4");
  for (auto _ : state) benchmark::DoNotOptimize(chi_g(m));
}
BENCHMARK(BM_ChiG)->Unit(benchmark::kMillisecond);

static void BM_SeriesChiGK(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_g_of_k({d + 2, 2}));
}
BENCHMARK(BM_SeriesChiGK)->Range(8, 512);
BENCHMARK_MAIN();
