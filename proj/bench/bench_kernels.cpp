#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "setvar/kernels.hpp"

using namespace setvar;

namespace {

CompactSet cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(dim);
    for (auto& v : c) v = u(rng);
    pts.emplace_back(std::move(c));
  }
  return CompactSet(MetricSpace::euclidean(dim), std::move(pts));
}

std::vector<CompactSet> clouds(std::size_t count, std::size_t n) {
  std::vector<CompactSet> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(cloud(n, 3, 100 + k));
  return out;
}

void bm_excess_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto x = cloud(n, 3, 1), y = cloud(n, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::excess_serial(x, y));
  state.SetComplexityN(state.range(0));
}

void bm_excess_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto x = cloud(n, 3, 1), y = cloud(n, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::excess_parallel(x, y));
  state.counters["threads"] = kernels::max_threads();
}

void bm_pairwise_serial(benchmark::State& state) {
  auto sets = clouds(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_excess_serial(sets));
}

void bm_pairwise_parallel(benchmark::State& state) {
  auto sets = clouds(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_excess_parallel(sets));
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(bm_excess_serial)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(bm_excess_parallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(bm_pairwise_serial)->Arg(8)->Arg(32);
BENCHMARK(bm_pairwise_parallel)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
