#pragma once

#include <optional>
#include <string>

#include "newton_osc/numeric_verify.hpp"

namespace newton_osc {

struct AnalysisConfig {
  std::size_t dimension = 0;
  std::string phase;
  IntVector beta;              // empty: all zeros
  std::vector<double> radius;  // empty: 1/2 on every axis
  std::uint64_t seed = 0;
  double quad_tol = 1e-6;
  double fit_tol = 0.05;
  double lambda_min = 1e2;
  double lambda_max = 0;       // 0: 1e5 for n <= 2, 1e4 otherwise
  std::size_t lambda_points = 24;
  unsigned threads = 0;

  // Fills in the defaults above and validates lengths and ranges.
  AnalysisConfig resolved() const;
};

struct Analysis {
  Polynomial phase{1};
  NewtonPolyhedron polyhedron{1, {ExponentVector{0}}, {}};
  DistanceResult distance;
  NondegeneracyReport nondegeneracy;
  Fan normal;
  Fan smooth;
  std::vector<Chart> charts;
  DecayPrediction main;
  DecayPrediction weighted;
  std::vector<DecayPrediction> per_chart;
  std::optional<SweepResult> sweep;
};

// Exact pipeline: polyhedron, distance, nondegeneracy gate, fans, charts and
// predictions. Degenerate phases raise DegeneratePhaseError.
Analysis run_analysis(const AnalysisConfig& config);

// Adds the lambda sweep, fitted against the weighted prediction (which for
// beta = 0 has the main exponent and the sharper log power).
void run_verification(Analysis& analysis, const AnalysisConfig& config);

bool fit_within_tolerance(const Analysis& analysis, const AnalysisConfig& config);

}  // namespace newton_osc
