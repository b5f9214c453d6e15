#include <doctest.h>

#include <cmath>
#include <random>

#include "newton_osc/errors.hpp"
#include "newton_osc/polynomial.hpp"
#include "oracles.hpp"

using namespace newton_osc;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(n);
    for (auto& x : e) x = exp(rng);
    p += Polynomial::monomial(e, oracle::frac(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse_polynomial examples") {
  CHECK(parse_polynomial("x1^2*x2", 2).terms() == Polynomial::Terms{{{2, 1}, 1}});
  CHECK(parse_polynomial("x1^2 + 2*x1*x2^3 - x1^2", 2).terms() == Polynomial::Terms{{{1, 3}, 2}});
  CHECK(parse_polynomial("x1^3 + x2^2", 2).terms() == Polynomial::Terms{{{3, 0}, 1}, {{0, 2}, 1}});
  CHECK(parse_polynomial("-2/5*x3 + 3", 3).terms() == Polynomial::Terms{{{0, 0, 0}, 3}, {{0, 0, 1}, Rational(-2, 5)}});
  CHECK(parse_polynomial("x1 * x1", 1).terms() == Polynomial::Terms{{{2}, 1}});
  CHECK(parse_polynomial("x1 - x1", 1).is_zero());
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_polynomial("x1^2 + * x2", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
    CHECK(e.kind() == ErrorKind::kInput);
  }
  CHECK_THROWS_AS(parse_polynomial("x3", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("x0", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("x1^-2", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("x1^", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1", 0), Error);
}

TEST_CASE("evaluate examples") {
  const auto p = parse_polynomial("x1^2*x2", 2);
  const RationalVector pt = {2, 3};
  CHECK(evaluate(p, pt) == 12);
  const auto q = parse_polynomial("x1^3 + x2^2", 2);
  const RationalVector pt2 = {1, -1};
  CHECK(evaluate(q, pt2) == 2);
  const auto c = parse_polynomial("x1*x2 + 7/3", 2);
  const RationalVector origin = {0, 0};
  CHECK(evaluate(c, origin) == Rational(7, 3));
  CHECK(evaluate(c, origin) == c.constant_term());
  const RationalVector wrong = {1};
  CHECK_THROWS_AS(evaluate(c, wrong), Error);
}

TEST_CASE("partial_derivative examples") {
  const auto p = parse_polynomial("x1^2*x2", 2);
  CHECK(partial_derivative(p, 0).terms() == Polynomial::Terms{{{1, 1}, 2}});
  CHECK(partial_derivative(p, 1).terms() == Polynomial::Terms{{{2, 0}, 1}});
  CHECK(partial_derivative(Polynomial::constant(2, 5), 1).is_zero());
  CHECK_THROWS_AS(partial_derivative(p, 2), Error);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto p = random_polynomial(rng, n, 1 + trial % 7, 5);
    const auto text = to_string(p);
    CHECK_MESSAGE(parse_polynomial(text, n) == p, text);
    CHECK(to_string(parse_polynomial(text, n)) == text);
  }
}

TEST_CASE("evaluation is linear and agrees with finite differences") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> coord(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto p = random_polynomial(rng, n, 5, 4);
    const auto q = random_polynomial(rng, n, 5, 4);
    RationalVector x(n);
    std::vector<double> xd(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = oracle::frac(coord(rng), 10);
      xd[j] = x[j].get_d();
    }
    CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
    CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));

    const std::size_t axis = trial % n;
    const double h = 1e-5;
    auto plus = xd, minus = xd;
    plus[axis] += h;
    minus[axis] -= h;
    const double fd = (evaluate(p, plus) - evaluate(p, minus)) / (2 * h);
    const double exact = evaluate(partial_derivative(p, axis), std::span<const double>(xd));
    CHECK(fd == doctest::Approx(exact).epsilon(1e-6).scale(1e3));
  }
}

TEST_CASE("monomial_substitution agrees with compose") {
  std::mt19937_64 rng(13);
  const std::vector<IntVector> matrix = {{1, 2}, {1, 3}};
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_polynomial(rng, 2, 4, 4);
    std::vector<Polynomial> sub;
    for (const auto& row : matrix) sub.push_back(Polynomial::monomial(row));
    CHECK(monomial_substitution(p, matrix) == compose(p, sub));
  }
}

TEST_CASE("pow and degree_in") {
  const auto p = parse_polynomial("x1 + x2", 2);
  CHECK(p.pow(2) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(p.pow(0) == Polynomial::constant(2, 1));
  CHECK(parse_polynomial("x1^3*x2 + x2^5", 2).degree_in(1) == 5);
}
