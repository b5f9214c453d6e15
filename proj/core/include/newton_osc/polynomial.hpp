#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newton_osc/rational.hpp"

namespace newton_osc {

// Multi-index alpha = (alpha_1, ..., alpha_n) of a monomial x^alpha.
using ExponentVector = IntVector;

// Exact sparse multivariate polynomial over the rationals.
//
// Terms are kept in a map keyed by exponent vector; no stored coefficient is
// zero and every key has length dimension(). Values are immutable once built
// apart from the compound-assignment operators.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t dimension);
  Polynomial(std::size_t dimension, Terms terms);

  static Polynomial constant(std::size_t dimension, const Rational& value);
  static Polynomial monomial(ExponentVector exponent, const Rational& coefficient = 1);
  // x_{axis} (0-based) in the given dimension.
  static Polynomial variable(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVector& exponent) const;
  Rational constant_term() const;
  std::vector<ExponentVector> support() const;
  // Largest exponent of the given axis across all terms (0 for the zero polynomial).
  std::int64_t degree_in(std::size_t axis) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned exponent) const;

 private:
  void add_term(const ExponentVector& exponent, const Rational& coefficient);
  void check_same_dimension(const Polynomial& other) const;

  std::size_t dimension_;
  Terms terms_;
};

// Parses "x1^2*x2 - 2/5*x3 + 3" style text in variables <var>1..<var>n.
// Throws ParseError (with position) on malformed text and Error(kInput) when
// a variable index falls outside 1..dimension.
Polynomial parse_polynomial(std::string_view text, std::size_t dimension, char variable = 'x');

// Canonical text: terms in descending lexicographic exponent order, unit
// coefficients elided, "0" for the zero polynomial.
std::string to_string(const Polynomial& p, char variable = 'x');

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
double evaluate(const Polynomial& p, std::span<const double> point);

// d/dx_{axis}, axis 0-based.
Polynomial partial_derivative(const Polynomial& p, std::size_t axis);

// p(q_1(y), ..., q_n(y)) where every q_j lives in the same dimension m.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> substitution);

// Monomial substitution x_j = prod_i y_i^{matrix[j][i]}: the term x^beta maps
// to y^{gamma} with gamma_i = sum_j beta_j * matrix[j][i].
Polynomial monomial_substitution(const Polynomial& p, const std::vector<IntVector>& matrix);

}  // namespace newton_osc
