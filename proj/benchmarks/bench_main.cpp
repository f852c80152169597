#include <benchmark/benchmark.h>

#include "netobs/centrality.hpp"
#include "netobs/colorability.hpp"
#include "netobs/placement.hpp"
#include "netobs/wdn.hpp"

#include <random>

using namespace netobs;

namespace {

PatternMatrix random_pattern(std::mt19937_64& rng, int rows, int cols,
                             double p_star) {
  PatternMatrix p(rows, cols);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (unit(rng) < p_star) p.set(i, j, Symbol::Star);
  return p;
}

// Ring of junctions with one pipe per hop.
NetworkModel ring_network(int n) {
  NetworkModel net;
  for (int i = 0; i < n; ++i)
    net.nodes.push_back({"n" + std::to_string(i), NodeKind::Junction});
  for (int i = 0; i < n; ++i)
    net.edges.push_back({"e" + std::to_string(i), i, (i + 1) % n});
  return net;
}

void bm_color(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto m = random_pattern(rng, n, n + n / 4, 4.0 / n);
  for (auto _ : state) benchmark::DoNotOptimize(color(m).colorable);
}
BENCHMARK(bm_color)->Arg(16)->Arg(64)->Arg(256);

void bm_check_observability_ring(benchmark::State& state) {
  const auto pattern = derive_wdn_pattern(ring_network(
      static_cast<int>(state.range(0))));
  std::vector<int> sensors;
  for (int s = 0; s < pattern.rows(); s += 3) sensors.push_back(s);
  const auto c = sensors_pattern(sensors, pattern.rows());
  for (auto _ : state)
    benchmark::DoNotOptimize(check_observability(pattern, c).observable);
}
BENCHMARK(bm_check_observability_ring)->Arg(8)->Arg(32)->Arg(128);

void bm_pagerank(benchmark::State& state) {
  const auto pattern = derive_wdn_pattern(ring_network(
      static_cast<int>(state.range(0))));
  const RealMatrix adj = pattern_adjacency(pattern);
  for (auto _ : state) benchmark::DoNotOptimize(pagerank(adj).sum());
}
BENCHMARK(bm_pagerank)->Arg(16)->Arg(64)->Arg(256);

void bm_place_ring(benchmark::State& state) {
  const auto pattern = derive_wdn_pattern(ring_network(
      static_cast<int>(state.range(0))));
  const int n = pattern.rows();
  RealVector c(n);
  for (int i = 0; i < n; ++i) c(i) = static_cast<double>(i % 5);
  const auto costs = CostTable::with_supplied_aggregate(c, c, c, c, c);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        place_sensors(pattern, costs).combinations_evaluated);
}
BENCHMARK(bm_place_ring)->Arg(4)->Arg(6);

void bm_brute_force(benchmark::State& state) {
  const auto pattern = derive_wdn_pattern(ring_network(
      static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_minimum(pattern).min_k);
}
BENCHMARK(bm_brute_force)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
