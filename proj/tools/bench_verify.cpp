#include <benchmark/benchmark.h>

#include "webweave/verify.hpp"

namespace {

using webweave::Check;
using webweave::Family;

Family family_for(std::int64_t id) {
  switch (id) {
    case 0:
      return Family::two_row(8);
    case 1:
      return Family::three_row(4);
    default:
      return Family::three_row(3, std::nullopt);
  }
}

void BM_VerifySerial(benchmark::State& state) {
  const Family family = family_for(state.range(0));
  for (auto _ : state) {
    auto report = webweave::verify_serial(family, Check::theorem);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetLabel(family.describe());
}

void BM_VerifyParallel(benchmark::State& state) {
  const Family family = family_for(state.range(0));
  for (auto _ : state) {
    auto report = webweave::verify_parallel(family, Check::theorem);
    benchmark::DoNotOptimize(report.total);
  }
  state.SetLabel(family.describe());
}

}  // namespace

BENCHMARK(BM_VerifySerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
