#include <benchmark/benchmark.h>

#include <random>

#include "cluster_quake/earthquake.hpp"

using namespace cluster_quake;

static const char* kTypes[] = {"A2", "G2", "A3", "B3", "D4", "F4"};

static void BM_Enumerate(benchmark::State& state) {
  const auto type = parse_dynkin_type(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(type));
  state.SetLabel(type.label());
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_Quake(benchmark::State& state) {
  const auto p = enumerate(parse_dynkin_type(kTypes[state.range(0)]));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-5, 5);
  const PositivePoint g0{p.base(), std::vector<double>(p.rank(), 0.0)};
  std::vector<TropicalPoint> points;
  for (int i = 0; i < 256; ++i) {
    TropicalPoint L{p.base(), {}};
    for (std::size_t j = 0; j < p.rank(); ++j) L.x.push_back(d(rng));
    points.push_back(std::move(L));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(quake(p, g0, points[i++ % points.size()]));
  state.SetLabel(p.type_tag());
}
BENCHMARK(BM_Quake)->DenseRange(0, 5);

static void BM_InverseQuake(benchmark::State& state) {
  const auto p = enumerate(parse_dynkin_type(kTypes[state.range(0)]));
  const PositivePoint g0{p.base(), std::vector<double>(p.rank(), 0.0)};
  TropicalPoint L{p.base(), std::vector<double>(p.rank(), -1.0)};
  const auto g = quake(p, g0, L).g;
  for (auto _ : state) benchmark::DoNotOptimize(inverse_quake(p, g0, g));
  state.SetLabel(p.type_tag());
}
BENCHMARK(BM_InverseQuake)->DenseRange(0, 5);

static void BM_Dquake(benchmark::State& state) {
  const auto p = enumerate(parse_dynkin_type("G2"));
  const PositivePoint g{p.base(), {0.0, 0.0}};
  const TropicalPoint L{p.base(), {2.0, -3.0}};
  for (auto _ : state) benchmark::DoNotOptimize(dquake(p, g, L));
}
BENCHMARK(BM_Dquake);
BENCHMARK_MAIN();
