#include <benchmark/benchmark.h>

#include "pdpolar/ber.hpp"
#include "pdpolar/channel.hpp"
#include "pdpolar/codesets.hpp"
#include "pdpolar/pipeline.hpp"
#include "pdpolar/polarize.hpp"

using namespace pdpolar;

namespace {

void BM_PolarizeExact(benchmark::State& state) {
  const CodeGeometry g(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    auto table = polarize_exact(0.5, g);
    benchmark::DoNotOptimize(table.values.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.n));
}
BENCHMARK(BM_PolarizeExact)->Arg(10)->Arg(16)->Arg(20);

void BM_ClassifyGood(benchmark::State& state) {
  const CodeGeometry g(static_cast<int>(state.range(0)), 0.3);
  const auto table = polarize_exact(0.5, g);
  for (auto _ : state) {
    auto good = classify_good(table);
    benchmark::DoNotOptimize(good.count());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.n));
}
BENCHMARK(BM_ClassifyGood)->Arg(10)->Arg(16)->Arg(20);

void BM_BuildPartition(benchmark::State& state) {
  const CodeGeometry g(static_cast<int>(state.range(0)), 0.3);
  const auto amp = classify_good(polarize_exact(0.45, g));
  const auto phase = classify_good(polarize_exact(0.6, g));
  const auto phase_deg = classify_good(polarize_exact(0.3, g));
  for (auto _ : state) {
    auto p = build_partition(amp, phase, phase_deg);
    benchmark::DoNotOptimize(p.delta());
  }
}
BENCHMARK(BM_BuildPartition)->Arg(10)->Arg(16)->Arg(20);

void BM_GenieBlockError(benchmark::State& state) {
  const CodeGeometry g(static_cast<int>(state.range(0)), 0.3);
  const auto table = polarize_exact(0.5, g);
  const IndexSet info = classify_good(table);
  for (auto _ : state) {
    const double estimate = genie_sc_block_error(table, info, 10000, 1);
    benchmark::DoNotOptimize(estimate);
  }
}
BENCHMARK(BM_GenieBlockError)->Arg(8)->Arg(10)->Arg(12);

void BM_AnalyzePipeline(benchmark::State& state) {
  const RunConfig cfg = parse_config(R"({
    "channel": {"family": "pauli", "p": [0.80, 0.04, 0.01, 0.15],
                "degrading": {"kind": "parametric", "delta": 0.5}},
    "geometry": {"k": 12, "beta": 0.3},
    "eta": 0.5
  })", ".");
  for (auto _ : state) {
    auto row = run_analyze(cfg);
    benchmark::DoNotOptimize(row.rq_pd);
  }
}
BENCHMARK(BM_AnalyzePipeline);

}  // namespace

BENCHMARK_MAIN();
