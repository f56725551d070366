#include <benchmark/benchmark.h>

#include "mltl/benchgen.hpp"
#include "mltl/parser.hpp"
#include "mltl/progression.hpp"
#include "mltl/semantics.hpp"
#include "mltl/transforms.hpp"

namespace {

mltl::GenConfig bench_config() {
  mltl::GenConfig cfg;
  cfg.seed = 7;
  cfg.max_depth = 4;
  cfg.max_bound = 4;
  cfg.num_props = 3;
  return cfg;
}

void BM_Evaluate(benchmark::State &state) {
  const auto cfg = bench_config();
  mltl::SplitMix64 rng(cfg.seed, 0);
  const auto f = mltl::gen_formula(cfg, rng);
  const auto t = mltl::gen_trace(cfg, 16, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mltl::evaluate(t, *f));
  }
}
BENCHMARK(BM_Evaluate);

void BM_Progress(benchmark::State &state) {
  const auto cfg = bench_config();
  mltl::SplitMix64 rng(cfg.seed, 1);
  const auto f = mltl::gen_formula(cfg, rng);
  const auto t = mltl::gen_trace(cfg, 16, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mltl::progress(f, t));
  }
}
BENCHMARK(BM_Progress);

void BM_ConvertNnf(benchmark::State &state) {
  const auto cfg = bench_config();
  mltl::SplitMix64 rng(cfg.seed, 2);
  const auto f = mltl::make_not(mltl::gen_formula(cfg, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mltl::convert_nnf(f));
  }
}
BENCHMARK(BM_ConvertNnf);

void BM_ParseRoundTrip(benchmark::State &state) {
  const auto cfg = bench_config();
  mltl::SplitMix64 rng(cfg.seed, 3);
  const auto text = mltl::print_formula(*mltl::gen_formula(cfg, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mltl::parse_formula(text));
  }
}
BENCHMARK(BM_ParseRoundTrip);

void BM_GenLabeledCase(benchmark::State &state) {
  const auto cfg = bench_config();
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mltl::gen_labeled_case(cfg, i++));
  }
}
BENCHMARK(BM_GenLabeledCase);

} // namespace

BENCHMARK_MAIN();
