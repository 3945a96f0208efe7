// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <map>

#include "lgi/affinity_propagation.hpp"
#include "lgi/betweenness.hpp"
#include "lgi/greedy_routing.hpp"
#include "lgi/kernels.hpp"
#include "lgi/npso.hpp"
#include "lgi/shortest_paths.hpp"

namespace {

const lgi::Graph& network(std::size_t n) {
  static std::map<std::size_t, lgi::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    lgi::NpsoParams p;
    p.n = n;
    p.temperature = 0.3;
    p.communities = 4;
    it = cache.emplace(n, lgi::npso_generate(p, lgi::RngSeed{1}).graph).first;
  }
  return it->second;
}

void BM_apsp(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::apsp(g));
}
void BM_apsp_serial(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::serial::apsp(g));
}

void BM_edge_betweenness(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::edge_betweenness(g));
}
void BM_edge_betweenness_serial(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::serial::edge_betweenness(g));
}

void BM_kernel_esp(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::kernel_esp(g));
}
void BM_kernel_esp_serial(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::serial::kernel_esp(g));
}

void BM_gr_score(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  const auto d = lgi::kernel_ra(g);
  for (auto _ : state) benchmark::DoNotOptimize(lgi::gr_score(g, d));
}
void BM_gr_score_serial(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0)));
  const auto d = lgi::kernel_ra(g);
  for (auto _ : state) benchmark::DoNotOptimize(lgi::serial::gr_score(g, d));
}

void BM_ap_run(benchmark::State& state) {
  const auto d = lgi::kernel_ra(network(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::ap_run(d, -20.0));
}
void BM_ap_run_serial(benchmark::State& state) {
  const auto d = lgi::kernel_ra(network(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lgi::serial::ap_run(d, -20.0));
}

}  // namespace

BENCHMARK(BM_apsp)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apsp_serial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_edge_betweenness)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_edge_betweenness_serial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_esp)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_esp_serial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gr_score)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gr_score_serial)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ap_run)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ap_run_serial)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
