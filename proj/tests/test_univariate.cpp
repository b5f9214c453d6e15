#include <doctest.h>

#include <algorithm>
#include <random>

#include "newton_osc/univariate.hpp"
#include "oracles.hpp"

using namespace newton_osc;

namespace {

UPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  RationalVector c = {lead};
  for (const auto& r : roots) {
    RationalVector next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return UPoly(c);
}

UPoly times(const UPoly& a, const UPoly& b) {
  RationalVector c(a.coefficients().size() + b.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  }
  return UPoly(c);
}

}  // namespace

TEST_CASE("division and gcd") {
  const auto a = from_roots({1, 2, 3});
  const auto b = from_roots({2, 5});
  const auto [q, r] = divide(a, b);
  CHECK(times(q, b).coefficients().size() == a.coefficients().size());
  CHECK(gcd(a, b) == monic(from_roots({2})));
  CHECK(squarefree_part(from_roots({1, 1, 2})) == monic(from_roots({1, 2})));
  CHECK(strip_zero_roots(from_roots({0, 0, 4})) == from_roots({4}));
}

TEST_CASE("Sturm counts and isolation on mixed roots") {
  const UPoly two({-2, 0, 1});  // x^2 - 2
  const auto p = times(from_roots({Rational(1, 3), -2}), two);
  const auto sf = squarefree_part(p);
  const auto s = sturm_sequence(sf);
  CHECK(count_roots(s, -10, 10) == 4);
  CHECK(count_roots(s, 0, 1) == 1);
  CHECK(count_roots(s, 1, 2) == 1);
  const auto iv = isolate_real_roots(p);
  REQUIRE(iv.size() == 4);
  std::vector<std::optional<Rational>> found;
  for (const auto& i : iv) found.push_back(rational_root_in(p, i));
  CHECK(found[0] == Rational(-2));
  CHECK(!found[1].has_value());  // -sqrt 2
  CHECK(found[2] == Rational(1, 3));
  CHECK(!found[3].has_value());
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) CHECK(iv[i].upper <= iv[i + 1].lower);
}

TEST_CASE("refine shrinks around the root") {
  const UPoly two({-2, 0, 1});
  const auto iv = isolate_real_roots(two);
  REQUIRE(iv.size() == 2);
  const auto r = refine(two, iv[1], Rational(1, 1000000));
  CHECK(r.upper - r.lower < Rational(1, 1000000));
  CHECK(r.lower.get_d() < 1.41421357);
  CHECK(r.upper.get_d() > 1.41421356);
}

TEST_CASE("random rational roots are recovered exactly") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    for (int k = 0; k < 1 + trial % 4; ++k) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.push_back(r);
    }
    const auto p = from_roots(roots, oracle::frac(den(rng), den(rng)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto iv = isolate_real_roots(p);
    REQUIRE(iv.size() == roots.size());
    for (std::size_t i = 0; i < iv.size(); ++i) CHECK(rational_root_in(p, iv[i]) == roots[i]);
  }
}

TEST_CASE("simplest_between") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
  CHECK(simplest_between(Rational(-1, 5), Rational(1, 7)) == 0);
  CHECK(simplest_between(Rational(-7, 10), Rational(-6, 10)) == Rational(-2, 3));
  CHECK(simplest_between(Rational(5, 2), Rational(5, 2)) == Rational(5, 2));
}
