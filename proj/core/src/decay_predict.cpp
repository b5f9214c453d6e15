#include "newton_osc/decay_predict.hpp"

#include "newton_osc/errors.hpp"

namespace newton_osc {

namespace {

void apply_gate(const NondegeneracyReport& report, DecayPrediction& out) {
  require_nondegenerate(report);
  if (report.numeric) {
    out.confidence = "numeric";
    out.notes.push_back("nondegeneracy of faces in three or more variables was checked numerically only");
  }
}

}  // namespace

DecayPrediction predict_main(const DistanceResult& distance, const NondegeneracyReport& nondegeneracy) {
  DecayPrediction out;
  out.source = "main_theorem";
  apply_gate(nondegeneracy, out);
  out.exponent = 1 / distance.distance;
  out.integer_case = distance.distance.get_num() == 1;
  out.log_power = distance.codimension - 1 + (out.integer_case ? 1 : 0);
  if (!distance.principal_face.compact) out.notes.push_back("principal face is not compact");
  if (distance.distance == 1) {
    out.notes.push_back("d_f = 1: log power " + std::to_string(distance.codimension) +
                        " is the general bound; under additional conditions the leading log power is at most " +
                        std::to_string(distance.codimension - 1));
  }
  return out;
}

DecayPrediction predict_main(const Polynomial& p, const NondegeneracyOptions& options) {
  check_phase_hypotheses(p);
  const auto np = newton_polyhedron(p);
  const auto report = check_all(p, np, options);
  return predict_main(newton_distance(np), report);
}

DecayPrediction predict_monomial(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) {
  if (alpha.size() != beta.size()) throw Error(ErrorKind::kInput, "dimension_mismatch", "alpha and beta differ in length");
  bool nonzero = false;
  bool damped = false;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0 || beta[j] < 0) throw Error(ErrorKind::kInput, "negative_exponent", "exponents must be >= 0");
    nonzero = nonzero || alpha[j] > 0;
    damped = damped || beta[j] > 0;
  }
  if (!nonzero) throw Error(ErrorKind::kInput, "zero_alpha", "alpha must be nonzero");
  auto [d, m] = chart_decay(IntVector(alpha.begin(), alpha.end()), IntVector(beta.begin(), beta.end()));
  DecayPrediction out;
  out.source = damped ? "key_lemma" : "monomial_lemma";
  out.exponent = 1 / d;
  out.log_power = m - 1;
  return out;
}

DecayPrediction predict_weighted(const NewtonPolyhedron& np, std::span<const std::int64_t> beta,
                                 const NondegeneracyReport& nondegeneracy) {
  DecayPrediction out;
  out.source = "gilula";
  apply_gate(nondegeneracy, out);
  const auto w = weighted_index(np, beta);
  out.exponent = w.floor_value;
  out.log_power = w.d_beta - 1;
  return out;
}

DecayPrediction predict_weighted(const Polynomial& p, std::span<const std::int64_t> beta,
                                 const NondegeneracyOptions& options) {
  check_phase_hypotheses(p);
  const auto np = newton_polyhedron(p);
  return predict_weighted(np, beta, check_all(p, np, options));
}

DecayPrediction predict_chart(const Chart& chart) {
  DecayPrediction out;
  out.source = "chart";
  out.exponent = 1 / chart.chart_d;
  out.log_power = chart.chart_m - 1;
  return out;
}

}  // namespace newton_osc
