#include "fmes/enumerate.hpp"
#include "fmes/quotient.hpp"

#include <benchmark/benchmark.h>

using namespace fmes;

namespace {

const GeneratorRows& rows_for(int weight) {
  static std::map<int, GeneratorRows> cache;
  auto it = cache.find(weight);
  if (it == cache.end()) it = cache.emplace(weight, generator_rows(IdealKind::swap, weight, Execution::serial)).first;
  return it->second;
}

void generator_rows_serial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generator_rows(IdealKind::swap, k, Execution::serial));
}

void generator_rows_parallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generator_rows(IdealKind::swap, k, Execution::parallel));
}

void reduce_serial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto& g = rows_for(k);
  for (auto _ : state) benchmark::DoNotOptimize(echelon_serial(count_words(k), g.rows));
  state.counters["rows"] = static_cast<double>(g.rows.size());
}

void reduce_parallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto& g = rows_for(k);
  for (auto _ : state) benchmark::DoNotOptimize(echelon_parallel(count_words(k), g.rows));
  state.counters["rows"] = static_cast<double>(g.rows.size());
}

}  // namespace

BENCHMARK(generator_rows_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(generator_rows_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(reduce_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(reduce_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
