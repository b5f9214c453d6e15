#include "newton_osc/pipeline.hpp"

#include "newton_osc/errors.hpp"

namespace newton_osc {

AnalysisConfig AnalysisConfig::resolved() const {
  AnalysisConfig c = *this;
  if (c.dimension < 1) throw Error(ErrorKind::kInput, "bad_dimension", "dimension must be at least 1");
  if (c.beta.empty()) c.beta.assign(c.dimension, 0);
  if (c.radius.empty()) c.radius.assign(c.dimension, 0.5);
  if (c.radius.size() == 1 && c.dimension > 1) c.radius.assign(c.dimension, c.radius.front());
  if (c.beta.size() != c.dimension) throw Error(ErrorKind::kInput, "dimension_mismatch", "--beta needs one entry per variable");
  if (c.radius.size() != c.dimension) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "--radius needs one entry per variable");
  }
  for (auto b : c.beta) {
    if (b < 0) throw Error(ErrorKind::kInput, "negative_beta", "beta entries must be nonnegative");
  }
  for (double r : c.radius) {
    if (!(r > 0)) throw Error(ErrorKind::kInput, "bad_radius", "radius entries must be positive");
  }
  if (c.lambda_max == 0) c.lambda_max = c.dimension <= 2 ? 1e5 : 1e4;
  if (!(c.quad_tol > 0)) throw Error(ErrorKind::kInput, "bad_tolerance", "--quad-tol must be positive");
  if (!(c.fit_tol > 0)) throw Error(ErrorKind::kInput, "bad_tolerance", "--fit-tol must be positive");
  if (!(c.lambda_max >= c.lambda_min)) throw Error(ErrorKind::kInput, "bad_grid", "--lmax must be >= --lmin");
  return c;
}

Analysis run_analysis(const AnalysisConfig& raw) {
  const AnalysisConfig config = raw.resolved();
  Analysis a;
  a.phase = parse_polynomial(config.phase, config.dimension);
  check_phase_hypotheses(a.phase);
  a.polyhedron = newton_polyhedron(a.phase);
  a.distance = newton_distance(a.polyhedron);

  NondegeneracyOptions nd;
  nd.seed = config.seed;
  a.nondegeneracy = check_all(a.phase, a.polyhedron, nd);

  a.normal = normal_fan(a.polyhedron);
  a.smooth = smooth_refinement(a.normal);
  a.charts = compute_charts(a.phase, a.polyhedron, a.smooth);

  a.main = predict_main(a.distance, a.nondegeneracy);
  a.weighted = predict_weighted(a.polyhedron, config.beta, a.nondegeneracy);
  for (const auto& chart : a.charts) a.per_chart.push_back(predict_chart(chart));
  return a;
}

void run_verification(Analysis& analysis, const AnalysisConfig& raw) {
  const AnalysisConfig config = raw.resolved();
  SweepOptions opts;
  opts.lambda_min = config.lambda_min;
  opts.lambda_max = config.lambda_max;
  opts.points = config.lambda_points;
  opts.quadrature.quad_tol = config.quad_tol;
  opts.threads = config.threads;
  analysis.sweep = sweep_and_fit(analysis.phase, config.beta, BumpSpec{config.radius}, opts, analysis.weighted);
}

bool fit_within_tolerance(const Analysis& analysis, const AnalysisConfig& config) {
  if (!analysis.sweep) return false;
  return std::abs(analysis.sweep->fit.fitted_exponent - to_double(analysis.weighted.exponent)) <= config.fit_tol;
}

}  // namespace newton_osc
