#include "newton_osc/report.hpp"

namespace newton_osc {

using nlohmann::json;

json to_json(const NewtonPolyhedron& np) {
  json facets = json::array();
  for (const auto& f : np.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  return {{"dimension", np.dimension()}, {"vertices", np.vertices()}, {"facets", facets}};
}

json to_json(const Face& face) {
  return {{"tight_facets", face.tight_facets},
          {"vertices", face.vertices},
          {"free_axes", face.free_axes},
          {"dimension", face.dimension},
          {"compact", face.compact}};
}

json to_json(const DistanceResult& d) {
  return {{"d_f", to_string(d.distance)}, {"principal_face", to_json(d.principal_face)}, {"codimension", d.codimension}};
}

json to_json(const NondegeneracyReport& r) {
  json faces = json::array();
  for (const auto& f : r.faces) {
    json entry = {{"face_id", f.face_id},
                  {"face", to_json(f.face)},
                  {"gamma_part", to_string(f.gamma)},
                  {"verdict", to_string(f.verdict)},
                  {"method", f.exact_method ? "exact" : "numeric"}};
    if (!f.exact_method) entry["residual"] = f.residual;
    if (!f.witness.empty()) entry["witness"] = {{"point", f.witness}, {"exact", f.witness_exact}};
    faces.push_back(std::move(entry));
  }
  return {{"nondegenerate", r.nondegenerate},
          {"any_degenerate", r.any_degenerate},
          {"any_inconclusive", r.any_inconclusive},
          {"numeric", r.numeric},
          {"faces", faces}};
}

json to_json(const Fan& fan) {
  json indices = json::array();
  bool simplicial = true;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) simplicial = simplicial && fan.cones[i].size() == fan.dimension;
  if (simplicial) {
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
      const Cone c = fan.cone(i);
      indices.push_back(c.dimension() == fan.dimension ? json(cone_index(c)) : json(nullptr));
    }
  }
  json out = {{"dimension", fan.dimension}, {"rays", fan.rays}, {"cones", fan.cones}};
  if (simplicial) out["indices"] = indices;
  return out;
}

json to_json(const Chart& chart) {
  return {{"generators", chart.cone.generators},
          {"exponent_matrix", chart.exponent_matrix},
          {"ell", chart.ell},
          {"jacobian_exponents", chart.jacobian_exponents},
          {"residual", to_string(chart.residual, 'y')},
          {"residual_constant_term", to_string(chart.residual.constant_term())},
          {"d_chart", to_string(chart.chart_d)},
          {"multiplicity", chart.chart_m}};
}

json to_json(const DecayPrediction& p) {
  return {{"exponent", to_string(p.exponent)},
          {"log_power", p.log_power},
          {"source", p.source},
          {"integer_case", p.integer_case},
          {"confidence", p.confidence},
          {"notes", p.notes}};
}

json to_json(const SweepResult& s, const DecayPrediction& target, double fit_tol) {
  json points = json::array();
  for (const auto& p : s.points) {
    points.push_back({{"lambda", p.lambda},
                      {"re", p.integral.value.real()},
                      {"im", p.integral.value.imag()},
                      {"abs", std::abs(p.integral.value)},
                      {"nodes_per_axis", p.integral.nodes_per_axis},
                      {"last_delta", p.integral.last_delta},
                      {"converged", p.integral.converged},
                      {"below_noise_floor", p.integral.below_noise_floor}});
  }
  const auto& f = s.fit;
  const double predicted = to_double(target.exponent);
  return {{"target", to_json(target)},
          {"points", points},
          {"fit",
           {{"points_used", f.points_used},
            {"frozen_log_power", f.frozen_log_power},
            {"fitted_exponent", f.fitted_exponent},
            {"residual_rms", f.residual_rms},
            {"frozen_exponent", f.frozen_exponent},
            {"fitted_log_power", f.fitted_log_power},
            {"log_power_residual_rms", f.log_power_residual_rms},
            {"joint_exponent", f.joint_exponent},
            {"joint_log_power", f.joint_log_power}}},
          {"exponent_error", std::abs(f.fitted_exponent - predicted)},
          {"within_tolerance", std::abs(f.fitted_exponent - predicted) <= fit_tol},
          {"warnings", s.warnings}};
}

json input_echo(const AnalysisConfig& c, bool verify) {
  json j = {{"phase", c.phase},
            {"dimension", c.dimension},
            {"beta", c.beta},
            {"radius", c.radius},
            {"seed", c.seed},
            {"nondegeneracy_starts_per_orthant", NondegeneracyOptions{}.starts_per_orthant}};
  if (verify) {
    j["quad_tol"] = c.quad_tol;
    j["fit_tol"] = c.fit_tol;
    j["lambda_min"] = c.lambda_min;
    j["lambda_max"] = c.lambda_max;
    j["lambda_points"] = c.lambda_points;
    j["initial_nodes_per_axis"] = QuadratureOptions{}.initial_nodes;
    j["max_nodes_per_axis"] = default_max_nodes(c.dimension);
  }
  return j;
}

json analysis_report(const Analysis& a, const AnalysisConfig& raw) {
  const AnalysisConfig c = raw.resolved();
  json charts = json::array();
  for (const auto& chart : a.charts) charts.push_back(to_json(chart));
  json per_chart = json::array();
  for (const auto& p : a.per_chart) per_chart.push_back(to_json(p));
  json out = {{"schema", kSchemaVersion},
              {"input", input_echo(c, a.sweep.has_value())},
              {"phase", to_string(a.phase)},
              {"polyhedron", to_json(a.polyhedron)},
              {"distance", to_json(a.distance)},
              {"nondegeneracy", to_json(a.nondegeneracy)},
              {"fans", {{"normal", to_json(a.normal)}, {"smooth", to_json(a.smooth)}}},
              {"charts", charts},
              {"predictions", {{"main", to_json(a.main)}, {"weighted", to_json(a.weighted)}, {"charts", per_chart}}}};
  if (a.sweep) out["verification"] = to_json(*a.sweep, a.weighted, c.fit_tol);
  return out;
}

json charts_report(const Analysis& a, const AnalysisConfig& raw) {
  const AnalysisConfig c = raw.resolved();
  json charts = json::array();
  for (const auto& chart : a.charts) charts.push_back(to_json(chart));
  return {{"schema", kSchemaVersion},
          {"input", input_echo(c, false)},
          {"phase", to_string(a.phase)},
          {"polyhedron", to_json(a.polyhedron)},
          {"fans", {{"normal", to_json(a.normal)}, {"smooth", to_json(a.smooth)}}},
          {"charts", charts}};
}

NewtonPolyhedron polyhedron_from_json(const json& j) {
  try {
    std::vector<Facet> facets;
    for (const auto& f : j.at("facets")) {
      facets.push_back({f.at("normal").get<IntVector>(), f.at("offset").get<std::int64_t>()});
    }
    return NewtonPolyhedron(j.at("dimension").get<std::size_t>(), j.at("vertices").get<std::vector<ExponentVector>>(),
                            std::move(facets));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInput, "bad_report", std::string("malformed polyhedron: ") + e.what());
  }
}

Fan fan_from_json(const json& j) {
  try {
    Fan fan;
    fan.dimension = j.at("dimension").get<std::size_t>();
    fan.rays = j.at("rays").get<std::vector<IntVector>>();
    fan.cones = j.at("cones").get<std::vector<std::vector<std::size_t>>>();
    return fan;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInput, "bad_report", std::string("malformed fan: ") + e.what());
  }
}

json error_json(const Error& e) {
  json out = {{"schema", kSchemaVersion},
              {"error", {{"kind", to_string(e.kind())}, {"tag", e.tag()}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}}}};
  if (const auto* d = dynamic_cast<const DegeneratePhaseError*>(&e)) {
    out["error"]["witness"] = {{"point", d->witness()}, {"exact", d->witness_exact()}};
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) out["error"]["position"] = p->position();
  if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) out["error"]["last_delta"] = c->last_delta();
  return out;
}

}  // namespace newton_osc
