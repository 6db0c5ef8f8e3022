// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "circsym/autgroup.hpp"
#include "circsym/catalog.hpp"
#include "circsym/circulant.hpp"
#include "circsym/named_graphs.hpp"

using namespace circsym;

namespace {

Graph subject(int which) {
  switch (which) {
    case 0:
      return build(parse_connection_set(12, "±1,±5,6"));
    case 1:
      return named::icosahedron();
    default:
      return build(parse_connection_set(18, "±2,±3,±4,±8"));
  }
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(g));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms_serial(g));
}

void BM_TwoGeneratorParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_two_generator(static_cast<int>(state.range(0))));
}

void BM_TwoGeneratorSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_two_generator_serial(static_cast<int>(state.range(0))));
}

void BM_ThreeGeneratorParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_three_generator(static_cast<int>(state.range(0))));
}

void BM_ThreeGeneratorSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_three_generator_serial(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoGeneratorParallel)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoGeneratorSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThreeGeneratorParallel)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThreeGeneratorSerial)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
