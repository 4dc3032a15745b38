#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "hcc/minimax.hpp"

namespace {

void BM_minimax_distances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hcc::SignedMatrix d =
      hcc::bench::random_matrix(n, hcc::MatrixKind::Dissimilarity);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcc::minimax_distances(d));
  }
}

void BM_components_cc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hcc::SignedMatrix s =
      hcc::bench::random_matrix(n, hcc::MatrixKind::Similarity);
  const hcc::BinaryAdjacency a = hcc::threshold_positive(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcc::components_cc(a));
  }
}

}  // namespace

BENCHMARK(BM_minimax_distances)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_components_cc)->Arg(256)->Arg(1024);
