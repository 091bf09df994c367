#include "chessdeg/degree.hpp"
#include "chessdeg/homology.hpp"
#include "chessdeg/scenario.hpp"

#include <benchmark/benchmark.h>

using namespace chessdeg;

static void BM_HomologyChessboard(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const auto k = chessboard_complex(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(homology(k));
}
BENCHMARK(BM_HomologyChessboard)->Args({4, 3})->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_DenseSnf(benchmark::State& state) {
  const auto k = chessboard_complex(4, 4);
  const auto m = boundary_matrix(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_DenseSnf)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_OrientChessboard(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto board = make_complex(chessboard_complex(r, r - 1));
  for (auto _ : state) benchmark::DoNotOptimize(orient(board));
}
BENCHMARK(BM_OrientChessboard)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DegreeHomological(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto xi = canonical_projection(r, r - 1);
  auto dom = orient(xi.domain()), cod = orient(xi.codomain());
  for (auto _ : state) benchmark::DoNotOptimize(degree_homological(xi, dom, cod));
}
BENCHMARK(BM_DegreeHomological)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CommonPointLp(benchmark::State& state) {
  const auto config = random_config(2, {3, 3, 3}, 11);
  RainbowPartitionStream stream(config, 3, PartitionFilter::maximal);
  std::vector<RainbowPartition> parts;
  while (auto p = stream.next()) parts.push_back(*p);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(common_point_lp(config, parts[i++ % parts.size()]));
}
BENCHMARK(BM_CommonPointLp)->Unit(benchmark::kMicrosecond);

static void BM_PartitionStream(benchmark::State& state) {
  const auto config = random_config(3, {4, 4, 4, 4}, 5);
  for (auto _ : state) {
    RainbowPartitionStream stream(config, 4, PartitionFilter::covering);
    std::size_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionStream)->Unit(benchmark::kMillisecond);

static void BM_ScenarioK333(benchmark::State& state) {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::K333;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(spec, seed++));
}
BENCHMARK(BM_ScenarioK333)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
