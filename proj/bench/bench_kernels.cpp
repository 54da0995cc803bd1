// Serial reference against the OpenMP kernels.
#include "nsa/audit.hpp"
#include "nsa/fintop.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_enumerate_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsa::fintop::enumerate_topologies_serial(state.range(0)));
}
void BM_enumerate_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsa::fintop::enumerate_topologies(state.range(0)));
}
void BM_audit_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsa::audit::run_audit_serial(state.range(0)));
}
void BM_audit_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsa::audit::run_audit(state.range(0)));
}

}  // namespace

BENCHMARK(BM_enumerate_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
