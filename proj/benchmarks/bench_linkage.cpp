#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "hcc/linkage.hpp"

namespace {

void BM_agglomerate(benchmark::State& state, hcc::LinkageCriterion criterion) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hcc::SignedMatrix m =
      hcc::bench::random_matrix(n, hcc::MatrixKind::Similarity);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcc::agglomerate(m, criterion));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_agglomerate, single, hcc::LinkageCriterion::Single)
    ->Arg(64)
    ->Arg(256)
    ->Arg(512);
BENCHMARK_CAPTURE(BM_agglomerate, complete, hcc::LinkageCriterion::Complete)
    ->Arg(64)
    ->Arg(256)
    ->Arg(512);
BENCHMARK_CAPTURE(BM_agglomerate, average, hcc::LinkageCriterion::Average)
    ->Arg(64)
    ->Arg(256)
    ->Arg(512);
BENCHMARK_CAPTURE(BM_agglomerate, hcc, hcc::LinkageCriterion::Hcc)
    ->Arg(64)
    ->Arg(256)
    ->Arg(512);
