#include <benchmark/benchmark.h>

#include "hbcast/broadcast_sim.hpp"
#include "hbcast/dbqt.hpp"
#include "hbcast/general.hpp"
#include "hbcast/generators.hpp"
#include "hbcast/hypergraph.hpp"

namespace {

hbcast::GeneratedInstance instance(std::size_t users, std::size_t segments, std::size_t extra) {
  hbcast::GenConfig cfg;
  cfg.num_users = users;
  cfg.num_segments = segments;
  cfg.max_edge_size = 3;
  cfg.extra_edges = extra;
  cfg.seed = 42;
  return hbcast::random_instance(cfg);
}

void BM_MinCutExhaustive(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)), 64, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hbcast::min_cut_exhaustive(inst.graph));
}
BENCHMARK(BM_MinCutExhaustive)->DenseRange(6, 16, 2);

void BM_MinCutQuasiTree(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)), 64, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hbcast::min_cut_quasi_tree(inst.graph));
}
BENCHMARK(BM_MinCutQuasiTree)->DenseRange(6, 16, 2);

void BM_DbqtPlan(benchmark::State& state) {
  const auto inst = instance(12, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(hbcast::dbqt_schedule(inst.topology));
}
BENCHMARK(BM_DbqtPlan)->RangeMultiplier(2)->Range(16, 256);

void BM_DbqtPlanAndRun(benchmark::State& state) {
  const auto inst = instance(12, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    const auto plan = hbcast::dbqt_schedule(inst.topology);
    benchmark::DoNotOptimize(hbcast::run_schedule(inst.topology, plan.schedule));
  }
}
BENCHMARK(BM_DbqtPlanAndRun)->RangeMultiplier(2)->Range(16, 256);

void BM_DbqtGeneral(benchmark::State& state) {
  const auto inst = instance(10, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hbcast::dbqt_general(inst.topology));
}
BENCHMARK(BM_DbqtGeneral)->RangeMultiplier(2)->Range(16, 128);

void BM_DecodableWith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> held;
  for (std::size_t k = 1; k <= n / 2; ++k) held.push_back(2 * k);
  for (auto _ : state) benchmark::DoNotOptimize(hbcast::decodable_with(n, held.size(), held));
}
BENCHMARK(BM_DecodableWith)->RangeMultiplier(2)->Range(8, 128);

}  // namespace
BENCHMARK_MAIN();
