#include <benchmark/benchmark.h>

#include "newton_osc/pipeline.hpp"
#include "newton_osc/toric_chart.hpp"

using namespace newton_osc;

namespace {

const char* const kPhases2[] = {"x1^2*x2", "x1^3+x2^2", "x1^2*x2+x2^5", "x1^7+x1^3*x2^2+x2^11"};
const char* const kPhases3[] = {"x1^3+x2^4+x3^5", "x1^2*x2+x2^3+x3^4+x1*x3^3"};

void BM_Polyhedron2D(benchmark::State& state) {
  const auto p = parse_polynomial(kPhases2[state.range(0)], 2);
  for (auto _ : state) benchmark::DoNotOptimize(newton_distance(newton_polyhedron(p)));
  state.SetLabel(kPhases2[state.range(0)]);
}
BENCHMARK(BM_Polyhedron2D)->DenseRange(0, 3);

void BM_Polyhedron3D(benchmark::State& state) {
  const auto p = parse_polynomial(kPhases3[state.range(0)], 3);
  for (auto _ : state) benchmark::DoNotOptimize(newton_distance(newton_polyhedron(p)));
  state.SetLabel(kPhases3[state.range(0)]);
}
BENCHMARK(BM_Polyhedron3D)->DenseRange(0, 1);

void BM_SmoothRefinement(benchmark::State& state) {
  const auto p = parse_polynomial(kPhases3[state.range(0)], 3);
  const auto coarse = normal_fan(newton_polyhedron(p));
  for (auto _ : state) benchmark::DoNotOptimize(smooth_refinement(coarse));
  state.SetLabel(kPhases3[state.range(0)]);
}
BENCHMARK(BM_SmoothRefinement)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Charts(benchmark::State& state) {
  const auto p = parse_polynomial(kPhases3[0], 3);
  const auto np = newton_polyhedron(p);
  const auto fine = smooth_refinement(normal_fan(np));
  for (auto _ : state) benchmark::DoNotOptimize(compute_charts(p, np, fine));
}
BENCHMARK(BM_Charts)->Unit(benchmark::kMillisecond);

void BM_Nondegeneracy(benchmark::State& state) {
  const auto p = parse_polynomial(state.range(0) ? kPhases3[0] : kPhases2[3], state.range(0) ? 3 : 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_all(p));
}
BENCHMARK(BM_Nondegeneracy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Analysis(benchmark::State& state) {
  AnalysisConfig c;
  c.dimension = 3;
  c.phase = kPhases3[0];
  for (auto _ : state) benchmark::DoNotOptimize(run_analysis(c));
}
BENCHMARK(BM_Analysis)->Unit(benchmark::kMillisecond);

}  // namespace
