#include <benchmark/benchmark.h>

#include "rdmap/harness.hpp"
#include "rdmap/kernel.hpp"

namespace {

using namespace rdmap;

GroupRingElement kesten() {
  const auto g = GroupDescriptor::free(2);
  GroupRingElement f(g);
  for (const char* x : {"a", "A", "b", "B"}) f.add(make_free_word(g, x), 1.0);
  return f;
}

void BM_Ball(benchmark::State& state) {
  const auto g = GroupDescriptor::free(2);
  for (auto _ : state) benchmark::DoNotOptimize(ball(g, state.range(0)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ball_size(g, state.range(0))));
}
BENCHMARK(BM_Ball)->DenseRange(4, 8, 2);

void BM_CompressionMatrix(benchmark::State& state) {
  const auto f = kesten();
  for (auto _ : state) benchmark::DoNotOptimize(compression_matrix(f, state.range(0)));
}
BENCHMARK(BM_CompressionMatrix)->DenseRange(4, 8, 2);

void BM_KestenLower(benchmark::State& state) {
  const auto f = kesten();
  for (auto _ : state) benchmark::DoNotOptimize(opnorm_lower(f, state.range(0)));
}
BENCHMARK(BM_KestenLower)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CnCheck(benchmark::State& state) {
  const auto g = GroupDescriptor::free(2);
  const auto points = ball(g, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cn_check(g, points));
}
BENCHMARK(BM_CnCheck)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RunGrid(benchmark::State& state) {
  const auto f = kesten();
  const auto schedule = GridSchedule::standard(builtin_rd_params(f.group()));
  for (auto _ : state) benchmark::DoNotOptimize(run_grid(f, schedule));
}
BENCHMARK(BM_RunGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
