// Serial reference vs OpenMP for the three data-parallel kernels.
#include <benchmark/benchmark.h>

#include "pvds/generate.hpp"
#include "pvds/harness.hpp"
#include "pvds/planarity.hpp"
#include "pvds/regions.hpp"
#include "pvds/solver.hpp"

namespace {

using namespace pvds;

// A NO instance forces the oracle through every subset up to size k.
Instance oracle_input(int n) {
  Instance inst = make_special_case(generate_planar(n, 0.8, 42), parse_profile("r:2"));
  inst.set_budget(5);
  return inst;
}

void BM_BruteSerial(benchmark::State &state) {
  const Instance inst = oracle_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_brute_serial(inst, {30}));
}

void BM_BruteOpenMP(benchmark::State &state) {
  const Instance inst = oracle_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_brute(inst, {30}));
}

BENCHMARK(BM_BruteSerial)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_BruteOpenMP)->Arg(14)->Arg(18)->Arg(20);

Instance region_input(int n) { return make_special_case(generate_planar(n, 0.7, 9), parse_profile("random:2"), 9); }

void BM_RegionsSerial(benchmark::State &state) {
  const Instance inst = region_input(static_cast<int>(state.range(0)));
  const RotationSystem rs = embed(inst);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_regions_serial(inst, rs));
}

void BM_RegionsOpenMP(benchmark::State &state) {
  const Instance inst = region_input(static_cast<int>(state.range(0)));
  const RotationSystem rs = embed(inst);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_regions(inst, rs));
}

BENCHMARK(BM_RegionsSerial)->Arg(40)->Arg(120);
BENCHMARK(BM_RegionsOpenMP)->Arg(40)->Arg(120);

const std::vector<CorpusEntry> &suite_corpus() {
  static const auto corpus = make_corpus({.count = 200, .seed = 3});
  return corpus;
}

void BM_SoundnessSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_soundness_suite_serial(suite_corpus(), {}));
}

void BM_SoundnessOpenMP(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_soundness_suite(suite_corpus(), {}));
}

BENCHMARK(BM_SoundnessSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessOpenMP)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
