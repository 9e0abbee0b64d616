#include <benchmark/benchmark.h>

#include "ikalg/correspondence.hpp"

namespace {

using namespace ikalg;

void BM_StructureConstantsSym(benchmark::State& state) {
  const auto f = trivial_group();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    StructureConstants table(f, n);
    benchmark::DoNotOptimize(table.basis().size());
  }
}
BENCHMARK(BM_StructureConstantsSym)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_StructureConstantsZ2(benchmark::State& state) {
  const auto f = cyclic_group(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    StructureConstants table(f, n);
    benchmark::DoNotOptimize(table.basis().size());
  }
}
BENCHMARK(BM_StructureConstantsZ2)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CenterConstantsSym(benchmark::State& state) {
  const auto f = trivial_group();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CenterConstants table(f, n);
    benchmark::DoNotOptimize(table.labels(n).size());
  }
}
BENCHMARK(BM_CenterConstantsSym)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateElements(benchmark::State& state) {
  const auto f = cyclic_group(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(f, n, Budget{}).size());
}
BENCHMARK(BM_EnumerateElements)->DenseRange(3, 6);

void BM_AuditDType(benchmark::State& state) {
  const auto family = FamilySpec::builtin("dtype");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admissibility_audit(family, n).violations);
}
BENCHMARK(BM_AuditDType)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
