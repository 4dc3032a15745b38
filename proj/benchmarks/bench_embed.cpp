#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "hcc/dendro.hpp"
#include "hcc/embed.hpp"
#include "hcc/linkage.hpp"

namespace {

void BM_dendrogram_distances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hcc::Dendrogram d = hcc::agglomerate(
      hcc::bench::random_matrix(n, hcc::MatrixKind::Similarity),
      hcc::LinkageCriterion::Hcc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hcc::dendrogram_distances(d, hcc::LevelKind::TreeLevel));
  }
}

void BM_embed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hcc::Dendrogram d = hcc::agglomerate(
      hcc::bench::random_matrix(n, hcc::MatrixKind::Similarity),
      hcc::LinkageCriterion::Hcc);
  const hcc::UltrametricMatrix distances =
      hcc::dendrogram_distances(d, hcc::LevelKind::TreeLevel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcc::embed(distances));
  }
}

}  // namespace

BENCHMARK(BM_dendrogram_distances)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_embed)->Arg(64)->Arg(256)->Arg(512);
