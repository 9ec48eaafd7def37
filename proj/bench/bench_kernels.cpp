// Serial reference kernels vs their OpenMP counterparts on the reference
// corpus and on a synthetic cohort scaled up from it.

#include <benchmark/benchmark.h>

#include <random>

#include "softdx/dataset.hpp"
#include "softdx/kernels.hpp"

using namespace softdx;

namespace {

std::vector<PatientRecord> cohort(std::size_t n) {
  const auto base = load_dataset(SOFTDX_CORPUS_DIR "/dengue30.csv").records;
  if (n <= base.size()) return {base.begin(), base.begin() + static_cast<std::ptrdiff_t>(n)};
  std::mt19937_64 rng(7);
  std::vector<PatientRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PatientRecord r = base[i % base.size()];
    r.id = "p" + std::to_string(i);
    for (auto& [name, v] : r.values) v *= std::uniform_real_distribution<double>(0.9, 1.1)(rng);
    out.push_back(std::move(r));
  }
  return out;
}

RuleSpace space_for(std::size_t n) {
  const auto config = default_dengue_config();
  const auto records = cohort(n);
  const auto table = kernels::fuzzify_serial(records, config);
  std::vector<SoftSet> reduced;
  for (const auto& s : alpha_cut_all(table, config)) reduced.push_back(reduce_trivial(s));
  return build_rule_space(config, reduced);
}

void BM_FuzzifySerial(benchmark::State& state) {
  const auto records = cohort(static_cast<std::size_t>(state.range(0)));
  const auto config = default_dengue_config();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fuzzify_serial(records, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FuzzifyParallel(benchmark::State& state) {
  const auto records = cohort(static_cast<std::size_t>(state.range(0)));
  const auto config = default_dengue_config();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fuzzify_parallel(records, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto space = space_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_serial(space));
  state.counters["candidates"] = static_cast<double>(space.candidate_count());
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto space = space_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_parallel(space));
  state.counters["candidates"] = static_cast<double>(space.candidate_count());
}

}  // namespace

BENCHMARK(BM_FuzzifySerial)->Arg(30)->Arg(10000)->Arg(100000);
BENCHMARK(BM_FuzzifyParallel)->Arg(30)->Arg(10000)->Arg(100000);
BENCHMARK(BM_EnumerateSerial)->Arg(30)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(30)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
