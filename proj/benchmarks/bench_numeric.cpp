#include <benchmark/benchmark.h>

#include "newton_osc/numeric_verify.hpp"
#include "newton_osc/sublevel.hpp"

using namespace newton_osc;

namespace {

void BM_Integral1D(benchmark::State& state) {
  const auto p = parse_polynomial("x1^2", 1);
  const IntVector beta = {0};
  const auto bump = BumpSpec::uniform(1);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_oscillatory(p, beta, bump, lambda));
}
BENCHMARK(BM_Integral1D)->Arg(100)->Arg(10000)->Arg(100000);

void BM_Integral2D(benchmark::State& state) {
  const auto p = parse_polynomial("x1^2*x2", 2);
  const IntVector beta = {0, 0};
  const auto bump = BumpSpec::uniform(2);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_oscillatory(p, beta, bump, lambda));
}
BENCHMARK(BM_Integral2D)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Sweep2D(benchmark::State& state) {
  const auto p = parse_polynomial("x1^2*x2", 2);
  const IntVector beta = {0, 0};
  SweepOptions opt;
  opt.lambda_max = 1e4;
  opt.points = 12;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(p, beta, BumpSpec::uniform(2), opt));
}
BENCHMARK(BM_Sweep2D)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SublevelExact(benchmark::State& state) {
  const IntVector alpha = {2, 1, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sublevel(sublevel_expression(alpha), 1e-3));
}
BENCHMARK(BM_SublevelExact);

void BM_SublevelMonteCarlo(benchmark::State& state) {
  const IntVector alpha = {2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(sublevel_monte_carlo(alpha, 1e-2, 100000, 1));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SublevelMonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
