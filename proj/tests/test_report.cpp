#include <doctest.h>

#include <nlohmann/json.hpp>

#include "newton_osc/errors.hpp"
#include "newton_osc/pipeline.hpp"
#include "newton_osc/report.hpp"
#include "oracles.hpp"

using namespace newton_osc;
using nlohmann::json;

namespace {

AnalysisConfig config_of(const std::string& text, std::size_t n) {
  AnalysisConfig c;
  c.dimension = n;
  c.phase = text;
  return c;
}

}  // namespace

TEST_CASE("reports are byte-identical across runs") {
  for (const auto& ph : oracle::catalogue()) {
    CAPTURE(ph.text);
    const auto c = config_of(ph.text, ph.dimension);
    const auto a = analysis_report(run_analysis(c), c).dump(2);
    const auto b = analysis_report(run_analysis(c), c).dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("report layout") {
  const auto c = config_of("x1^3+x2^2", 2);
  const auto j = analysis_report(run_analysis(c), c);
  CHECK(j.at("schema") == "newton-osc/1");
  CHECK(j.at("phase") == "x1^3 + x2^2");
  // exact rationals travel as strings
  CHECK(j.at("distance").at("d_f") == "6/5");
  CHECK(j.at("predictions").at("main").at("exponent") == "5/6");
  CHECK(j.at("predictions").at("main").at("log_power") == 0);
  CHECK(j.at("charts").size() == 4);
  for (const auto& ch : j.at("charts")) {
    CHECK(ch.at("d_chart").is_string());
    CHECK(ch.at("residual").is_string());
    CHECK(ch.at("residual_constant_term") != "0");
  }
  CHECK(j.at("input").at("seed") == 0);
  CHECK(j.at("input").at("radius") == json::array({0.5, 0.5}));
  CHECK(!j.contains("verification"));

  const auto cj = charts_report(run_analysis(c), c);
  CHECK(cj.at("charts") == j.at("charts"));
  CHECK(!cj.contains("predictions"));
}

TEST_CASE("polyhedron and fan round trip through JSON") {
  for (const auto& ph : oracle::catalogue()) {
    CAPTURE(ph.text);
    const auto c = config_of(ph.text, ph.dimension);
    const auto a = run_analysis(c);
    const auto j = json::parse(analysis_report(a, c).dump());

    const auto np = polyhedron_from_json(j.at("polyhedron"));
    CHECK(np.vertices() == a.polyhedron.vertices());
    const auto d = newton_distance(np);
    CHECK(d.distance == a.distance.distance);
    CHECK(to_json(d) == to_json(a.distance));

    const auto normal = fan_from_json(j.at("fans").at("normal"));
    CHECK(normal == a.normal);
    const auto smooth = fan_from_json(j.at("fans").at("smooth"));
    CHECK(smooth == a.smooth);
    CHECK(smooth_refinement(normal) == smooth);

    // downstream stages from the deserialised data give the same predictions
    const auto charts = compute_charts(a.phase, np, smooth);
    REQUIRE(charts.size() == a.charts.size());
    for (std::size_t i = 0; i < charts.size(); ++i) {
      CHECK(to_json(charts[i]) == to_json(a.charts[i]));
      CHECK(to_json(predict_chart(charts[i])) == to_json(a.per_chart[i]));
    }
  }
  CHECK_THROWS_AS(polyhedron_from_json(json{{"dimension", 2}}), Error);
  CHECK_THROWS_AS(fan_from_json(json{{"rays", "nope"}}), Error);
}

TEST_CASE("error JSON") {
  try {
    parse_polynomial("x1^2 + * x2", 2);
    FAIL("parsed");
  } catch (const ParseError& e) {
    const auto j = error_json(e);
    CHECK(j.at("schema") == "newton-osc/1");
    CHECK(j.at("error").at("exit_code") == 2);
    CHECK(j.at("error").at("position") == 7);
  }
  try {
    run_analysis(config_of("x1^2+2*x1*x2+x2^2", 2));
    FAIL("accepted");
  } catch (const DegeneratePhaseError& e) {
    const auto j = error_json(e);
    CHECK(j.at("error").at("exit_code") == 3);
    CHECK(j.at("error").at("witness").at("point") == json::array({"1", "-1"}));
    CHECK(j.at("error").at("witness").at("exact") == true);
  }
  const auto j = error_json(ConvergenceError("stuck", 0.25));
  CHECK(j.at("error").at("exit_code") == 4);
  CHECK(j.at("error").at("last_delta") == 0.25);
}

TEST_CASE("verification section") {
  auto c = config_of("x1^2*x2", 2);
  c.lambda_max = 1e4;
  c.lambda_points = 10;
  auto a = run_analysis(c);
  run_verification(a, c);
  const auto j = analysis_report(a, c);
  const auto& v = j.at("verification");
  CHECK(v.at("points").size() == 10);
  CHECK(v.at("target").at("exponent") == "1/2");
  CHECK(v.at("within_tolerance") == fit_within_tolerance(a, c));
  CHECK(j.at("input").at("lambda_max") == 1e4);
}
