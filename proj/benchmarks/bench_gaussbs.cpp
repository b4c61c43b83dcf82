#include <numbers>

#include <benchmark/benchmark.h>

#include "gaussbs/beamsplitter.hpp"
#include "gaussbs/cascade.hpp"
#include "gaussbs/measures.hpp"
#include "gaussbs/sampling.hpp"

using namespace gaussbs;

namespace {

constexpr double kPi = std::numbers::pi;

void BM_ApplyMatrixProduct(benchmark::State& state) {
  Sampler rng(1);
  const TwoModeCovariance v = tensor(rng.single_mode(), rng.single_mode());
  const BeamSplitterParams p(0.6, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(v, p));
  }
}
BENCHMARK(BM_ApplyMatrixProduct);

void BM_OutputBlocksClosedForm(benchmark::State& state) {
  Sampler rng(1);
  const SingleModeCovariance v1 = rng.single_mode();
  const SingleModeCovariance v2 = rng.single_mode();
  const BeamSplitterParams p(0.6, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(output_blocks(v1, v2, p));
  }
}
BENCHMARK(BM_OutputBlocksClosedForm);

void BM_LogNegativity(benchmark::State& state) {
  Sampler rng(2);
  const TwoModeCovariance v = rng.two_mode();
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_negativity(v));
  }
}
BENCHMARK(BM_LogNegativity);

void BM_OracleLogNegativity(benchmark::State& state) {
  Sampler rng(2);
  const TwoModeCovariance v = rng.two_mode();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_log_negativity(v));
  }
}
BENCHMARK(BM_OracleLogNegativity);

void BM_Report(benchmark::State& state) {
  Sampler rng(3);
  const auto [v1, v2] = rng.constrained_pair();
  const BeamSplitterParams p(0.6, phase_condition(v1.b(), v2.b()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(report(v1, v2, p));
  }
}
BENCHMARK(BM_Report);

void BM_SplitTree(benchmark::State& state) {
  const double lambda_min = 0.25;
  const double lambda_max = 1.0 / (4.0 * lambda_min);
  const SingleModeCovariance ncs((lambda_min + lambda_max) / 2.0,
                                 (lambda_max - lambda_min) / 2.0);
  const int depth = static_cast<int>(state.range(0));
  const AngleSchedule schedule = schedules::constant(kPi / 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_tree(ncs, depth, schedule));
  }
  state.SetComplexityN(1 << depth);
}
BENCHMARK(BM_SplitTree)->Arg(8)->Arg(12)->Arg(16)->Complexity();

}  // namespace

BENCHMARK_MAIN();
