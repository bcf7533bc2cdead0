// Serial reference vs OpenMP kernels: candidate enumeration at a loaded
// leaf, and per-instance ensemble training.

#include <benchmark/benchmark.h>

#include "fairstream/candidates.hpp"
#include "fairstream/ensemble.hpp"
#include "support.hpp"

using namespace fairstream;

namespace {

std::shared_ptr<const Schema> wide_schema(int nominal, int numeric) {
  testing::SchemaBuilder b;
  for (int i = 0; i < nominal; ++i) b.nominal("n" + std::to_string(i), 12);
  for (int i = 0; i < numeric; ++i) b.numeric("x" + std::to_string(i));
  return b.build();
}

bool label(const Instance& x, std::mt19937_64& r) { return (x.values[1] < 4) != (r() % 5 == 0); }

void enumerate(benchmark::State& state, Execution execution) {
  const auto schema = wide_schema(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  LeafStats stats(*schema);
  for (const auto& x : testing::random_stream(*schema, 5000, 1, label)) stats.update(*schema, x);
  CriterionConfig cfg;
  cfg.kind = CriterionKind::afig;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(*schema, stats, cfg, execution));
}

void ensemble_train(benchmark::State& state, Execution execution) {
  const auto schema = wide_schema(6, 6);
  const auto xs = testing::random_stream(*schema, 20000, 2, label);
  EnsembleConfig cfg;
  cfg.window_size = 500;
  cfg.capacity = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SlidingWindowEnsemble e(schema, cfg, execution);
    for (const auto& x : xs) e.train(x);
    benchmark::DoNotOptimize(e.members().size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}

}  // namespace

BENCHMARK_CAPTURE(enumerate, serial, Execution::serial)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(enumerate, parallel, Execution::parallel)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(ensemble_train, serial, Execution::serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(ensemble_train, parallel, Execution::parallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
