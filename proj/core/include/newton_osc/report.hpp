#pragma once

#include <nlohmann/json.hpp>

#include "newton_osc/errors.hpp"
#include "newton_osc/pipeline.hpp"
#include "newton_osc/sublevel.hpp"

namespace newton_osc {

inline constexpr const char* kSchemaVersion = "newton-osc/1";

// Exact quantities are written as integers or fraction strings, never floats.
nlohmann::json to_json(const NewtonPolyhedron& np);
nlohmann::json to_json(const Face& face);
nlohmann::json to_json(const DistanceResult& d);
nlohmann::json to_json(const NondegeneracyReport& r);
nlohmann::json to_json(const Fan& fan);
nlohmann::json to_json(const Chart& chart);
nlohmann::json to_json(const DecayPrediction& p);
nlohmann::json to_json(const SweepResult& s, const DecayPrediction& target, double fit_tol);

nlohmann::json input_echo(const AnalysisConfig& config, bool verify);
nlohmann::json analysis_report(const Analysis& analysis, const AnalysisConfig& config);
nlohmann::json charts_report(const Analysis& analysis, const AnalysisConfig& config);

NewtonPolyhedron polyhedron_from_json(const nlohmann::json& j);
Fan fan_from_json(const nlohmann::json& j);

nlohmann::json error_json(const Error& e);

}  // namespace newton_osc
