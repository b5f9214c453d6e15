#pragma once

#include <string>
#include <vector>

#include "newton_osc/nondegeneracy.hpp"
#include "newton_osc/toric_chart.hpp"

namespace newton_osc {

// |I(lambda)| <= C lambda^{-exponent} (log lambda)^{log_power}.
struct DecayPrediction {
  Rational exponent;
  int log_power = 0;
  std::string source;          // main_theorem | monomial_lemma | key_lemma | gilula | chart
  bool integer_case = false;   // 1/d_f is an integer, which adds one log
  std::string confidence = "exact";  // "numeric" when nondegeneracy was only checked numerically
  std::vector<std::string> notes;
};

// exponent 1/d_f; log power k - 1, or k when 1/d_f is an integer.
DecayPrediction predict_main(const DistanceResult& distance, const NondegeneracyReport& nondegeneracy);
DecayPrediction predict_main(const Polynomial& p, const NondegeneracyOptions& options = {});

// Monomial phase x^alpha with amplitude |x|^beta: d = max alpha_j / (beta_j + 1),
// exponent 1/d, log power M - 1 with M the number of maximizing indices.
DecayPrediction predict_monomial(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta);

// exponent = weighted_index floor value, log power = d_beta - 1.
DecayPrediction predict_weighted(const NewtonPolyhedron& np, std::span<const std::int64_t> beta,
                                 const NondegeneracyReport& nondegeneracy);
DecayPrediction predict_weighted(const Polynomial& p, std::span<const std::int64_t> beta,
                                 const NondegeneracyOptions& options = {});

// Per-chart bound from the chart's monomial data: exponent 1/chart_d, log power M - 1.
DecayPrediction predict_chart(const Chart& chart);

}  // namespace newton_osc
