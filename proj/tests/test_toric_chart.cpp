#include <doctest.h>

#include <algorithm>
#include <random>

#include "newton_osc/errors.hpp"
#include "newton_osc/linear_algebra.hpp"
#include "newton_osc/toric_chart.hpp"
#include "oracles.hpp"

using namespace newton_osc;

namespace {

struct Setup {
  Polynomial p{1};
  NewtonPolyhedron np{1, {ExponentVector{0}}, {}};
  Fan smooth;
};

Setup setup(const std::string& text, std::size_t n) {
  Setup s;
  s.p = parse_polynomial(text, n);
  s.np = newton_polyhedron(s.p);
  s.smooth = smooth_refinement(normal_fan(s.np));
  return s;
}

const Chart& chart_on(const std::vector<Chart>& charts, std::vector<IntVector> gens) {
  std::sort(gens.begin(), gens.end());
  for (const auto& c : charts) {
    auto g = c.cone.generators;
    std::sort(g.begin(), g.end());
    if (g == gens) return c;
  }
  throw std::runtime_error("no chart on the requested cone");
}

// Independent re-check of f(pi(y)) = y^ell * residual by evaluation at
// random rational points.
bool identity_at_points(const Polynomial& p, const Chart& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7);
  const std::size_t n = p.dimension();
  for (int k = 0; k < 5; ++k) {
    RationalVector y(n);
    for (auto& v : y) v = oracle::frac(num(rng), 3);
    RationalVector x(n, 1);
    Rational mono = 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t e = 0; e < c.exponent_matrix[j][i]; ++e) x[j] *= y[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::int64_t e = 0; e < c.ell[i]; ++e) mono *= y[i];
    }
    if (evaluate(p, x) != mono * evaluate(c.residual, y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ell and Jacobian exponent examples") {
  CHECK(ell_values(Cone{{{1, 0}, {1, 1}}}, setup("x1^2+x2^2", 2).np) == IntVector{0, 2});
  CHECK(ell_values(Cone{{{1, 0}, {0, 1}}}, setup("x1^2*x2", 2).np) == IntVector{2, 1});
  CHECK(ell_values(Cone{{{1, 1}, {2, 3}}}, setup("x1^3+x2^2", 2).np) == IntVector{2, 6});
  CHECK(jacobian_exponents(Cone{{{1, 0}, {1, 1}}}) == IntVector{0, 1});
  CHECK(jacobian_exponents(Cone{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == IntVector{0, 0, 0});
  CHECK(jacobian_exponents(Cone{{{2, 3}, {1, 2}}}) == IntVector{4, 2});
  CHECK_THROWS_AS(jacobian_exponents(Cone{{{1, 0}, {2, 3}}}), Error);
}

TEST_CASE("pullback examples") {
  auto s = setup("x1^2+x2^2", 2);
  auto charts = compute_charts(s.p, s.np, s.smooth);
  auto c = chart_on(charts, {{1, 0}, {1, 1}});
  CHECK(c.ell == IntVector{0, 2});
  CHECK(c.residual == parse_polynomial("1 + y1^2", 2, 'y'));
  CHECK(c.chart_d == 1);
  CHECK(c.chart_m == 1);

  s = setup("x1^2*x2", 2);
  charts = compute_charts(s.p, s.np, s.smooth);
  REQUIRE(charts.size() == 1);
  // ell follows the generator order
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(charts[0].ell[i] == (charts[0].cone.generators[i] == IntVector{1, 0} ? 2 : 1));
  }
  CHECK(charts[0].residual == Polynomial::constant(2, 1));
  CHECK(charts[0].chart_d == 2);
  CHECK(charts[0].chart_m == 1);

  s = setup("x1^3+x2^2", 2);
  charts = compute_charts(s.p, s.np, s.smooth);
  c = chart_on(charts, {{1, 1}, {2, 3}});
  CHECK(c.ell == IntVector{2, 6});
  CHECK(c.residual == parse_polynomial("1 + y1", 2, 'y'));
  CHECK(c.chart_d == Rational(6, 5));
  CHECK(c.chart_m == 1);
  // columns are the generators
  CHECK(c.exponent_matrix == std::vector<IntVector>{{1, 2}, {1, 3}});
}

TEST_CASE("chart_decay ignores zero ell entries") {
  CHECK(chart_decay(IntVector{0, 2}, IntVector{0, 1}) == std::pair<Rational, int>{1, 1});
  CHECK(chart_decay(IntVector{2, 2}, IntVector{0, 0}) == std::pair<Rational, int>{2, 2});
  CHECK(chart_decay(IntVector{0, 0}, IntVector{0, 0}).first == 0);
}

TEST_CASE("catalogue charts: identity, residual, determinant, distance") {
  std::mt19937_64 rng(61);
  for (const auto& ph : oracle::catalogue()) {
    CAPTURE(ph.text);
    const auto s = setup(ph.text, ph.dimension);
    const auto d = newton_distance(s.np).distance;
    const auto charts = compute_charts(s.p, s.np, s.smooth);
    Rational best = 0;
    for (const auto& c : charts) {
      std::vector<Polynomial> map;
      for (const auto& row : c.exponent_matrix) map.push_back(Polynomial::monomial(row));
      CHECK(compose(s.p, map) == Polynomial::monomial(c.ell) * c.residual);
      CHECK(identity_at_points(s.p, c, rng));
      CHECK(c.residual.constant_term() != 0);
      const auto det = determinant(to_rational_matrix(c.exponent_matrix));
      CHECK((det == 1 || det == -1));
      CHECK(jacobian_is_monomial(c));
      CHECK(c.chart_d <= d);
      best = std::max(best, c.chart_d);
      // ell agrees with a direct minimum over the support
      for (std::size_t i = 0; i < c.ell.size(); ++i) {
        std::int64_t m = INT64_MAX;
        for (const auto& e : s.p.support()) m = std::min(m, dot(c.cone.generators[i], e));
        CHECK(c.ell[i] == m);
      }
    }
    CHECK(best == d);
  }
}

TEST_CASE("random phases keep the chart invariants") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<int> exp(0, 5);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Polynomial p(n);
    while (p.size() < 3 + static_cast<std::size_t>(trial % 3)) {
      ExponentVector e(n);
      std::int64_t total = 0;
      for (auto& x : e) total += (x = exp(rng));
      const long c = coef(rng);
      if (total >= 2 && c != 0) p += Polynomial::monomial(e, c);
    }
    CAPTURE(to_string(p));
    const auto np = newton_polyhedron(p);
    const auto charts = compute_charts(p, np, smooth_refinement(normal_fan(np)));
    const auto d = newton_distance(np).distance;
    Rational best = 0;
    for (const auto& c : charts) {
      CHECK(identity_at_points(p, c, rng));
      CHECK(c.residual.constant_term() != 0);
      CHECK(jacobian_is_monomial(c));
      CHECK(c.chart_d <= d);
      best = std::max(best, c.chart_d);
    }
    CHECK(best == d);
  }
}

TEST_CASE("pullback rejects a cone outside the polyhedron's fan") {
  // <(1,1),(1,2)> straddles the ray (2,3); the residual y1 + y2 vanishes
  // at the origin
  const auto s = setup("x1^3+x2^2", 2);
  CHECK_THROWS_AS(pullback(s.p, Cone{{{1, 1}, {1, 2}}}, s.np), Error);
  CHECK_NOTHROW(pullback(s.p, Cone{{{1, 0}, {1, 1}}}, s.np));
}
