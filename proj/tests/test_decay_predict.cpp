#include <doctest.h>

#include <algorithm>
#include <random>

#include "newton_osc/decay_predict.hpp"
#include "newton_osc/errors.hpp"
#include "oracles.hpp"

using namespace newton_osc;

namespace {

DecayPrediction main_of(const std::string& text, std::size_t n) { return predict_main(parse_polynomial(text, n)); }

}  // namespace

TEST_CASE("main theorem examples") {
  auto p = main_of("x1^2*x2", 2);
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 0);
  CHECK(p.source == "main_theorem");
  CHECK(!p.integer_case);

  p = main_of("x1^2*x2^2", 2);
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 1);

  p = main_of("x1^2+x2^2", 2);
  CHECK(p.exponent == 1);
  CHECK(p.log_power == 1);
  CHECK(p.integer_case);
  // d_f = 1 carries the note about the sharper bound
  CHECK(std::any_of(p.notes.begin(), p.notes.end(), [](const std::string& s) { return s.find("d_f = 1") == 0; }));

  p = main_of("x1^3+x2^2", 2);
  CHECK(p.exponent == Rational(5, 6));
  CHECK(p.log_power == 0);
  CHECK(p.confidence == "exact");

  p = main_of("x1^3+x2^4+x3^5", 3);
  CHECK(p.confidence == "numeric");
}

TEST_CASE("main theorem is withheld for degenerate phases") {
  try {
    main_of("x1^2+2*x1*x2+x2^2", 2);
    FAIL("prediction issued");
  } catch (const DegeneratePhaseError& e) {
    CHECK(e.kind() == ErrorKind::kHypothesis);
  }
  try {
    main_of("x1^2+x2", 2);
    FAIL("prediction issued");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kHypothesis);
  }
}

TEST_CASE("monomial lemma examples") {
  auto p = predict_monomial(IntVector{2, 1}, IntVector{0, 0});
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 0);
  CHECK(p.source == "monomial_lemma");
  p = predict_monomial(IntVector{2, 2}, IntVector{0, 0});
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 1);
  p = predict_monomial(IntVector{3, 2}, IntVector{1, 0});
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 0);
  CHECK(p.source == "key_lemma");
  p = predict_monomial(IntVector{2}, IntVector{1});
  CHECK(p.exponent == 1);
  CHECK_THROWS_AS(predict_monomial(IntVector{0, 0}, IntVector{0, 0}), Error);
}

TEST_CASE("weighted examples") {
  const IntVector zero = {0, 0}, one = {1, 1};
  auto p = predict_weighted(parse_polynomial("x1^2*x2^2", 2), zero);
  CHECK(p.exponent == Rational(1, 2));
  CHECK(p.log_power == 1);
  CHECK(p.source == "gilula");
  p = predict_weighted(parse_polynomial("x1^2+x2^2", 2), zero);
  CHECK(p.exponent == 1);
  CHECK(p.log_power == 0);
  p = predict_weighted(parse_polynomial("x1^2*x2^2", 2), one);
  CHECK(p.exponent == 1);
  CHECK(p.log_power == 1);
}

TEST_CASE("catalogue consistency between main, weighted and chart predictions") {
  for (const auto& ph : oracle::catalogue()) {
    CAPTURE(ph.text);
    const auto f = parse_polynomial(ph.text, ph.dimension);
    const auto np = newton_polyhedron(f);
    const auto dist = newton_distance(np);
    const auto main = predict_main(f);
    CHECK(main.exponent == 1 / dist.distance);
    const auto w = predict_weighted(f, IntVector(ph.dimension, 0));
    CHECK(w.exponent == main.exponent);
    if (!main.integer_case) CHECK(w.log_power == main.log_power);

    const auto charts = compute_charts(f, np, smooth_refinement(normal_fan(np)));
    Rational best = 0;
    for (const auto& c : charts) {
      const auto pc = predict_chart(c);
      CHECK(pc.exponent >= main.exponent);
      best = std::max(best, c.chart_d);
    }
    CHECK(main.exponent == 1 / best);
  }
}

TEST_CASE("monomial predictions ignore the order of variables") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<std::int64_t> e(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntVector alpha = {e(rng), e(rng), 1 + e(rng)};
    const IntVector beta(3, 0);
    const auto ref = predict_monomial(alpha, beta);
    std::sort(alpha.begin(), alpha.end());
    do {
      const auto p = predict_monomial(alpha, beta);
      CHECK(p.exponent == ref.exponent);
      CHECK(p.log_power == ref.log_power);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
}

TEST_CASE("positive scaling leaves the prediction unchanged") {
  for (const auto& ph : oracle::catalogue()) {
    const auto f = parse_polynomial(ph.text, ph.dimension);
    const auto ref = predict_main(f);
    for (const Rational c : {Rational(1, 7), Rational(3), Rational(22, 5)}) {
      const auto p = predict_main(c * f);
      CHECK(p.exponent == ref.exponent);
      CHECK(p.log_power == ref.log_power);
    }
  }
}
