#pragma once

#include <vector>

#include "newton_osc/toric_fan.hpp"

namespace newton_osc {

// Monomial chart x_j = prod_i y_i^{A[j][i]} of a smooth maximal cone; the
// columns of A are the cone generators alpha^i.
struct Chart {
  Cone cone;
  std::vector<IntVector> exponent_matrix;
  IntVector ell;                 // l(alpha^i)
  IntVector jacobian_exponents;  // |alpha^i| - 1
  Polynomial residual{1};        // f(pi(y)) = y^ell * residual(y)
  Rational chart_d;
  int chart_m = 0;
};

IntVector ell_values(const Cone& cone, const NewtonPolyhedron& np);
IntVector jacobian_exponents(const Cone& cone);

// Pulls p back through the chart and factors out y^ell. The identity is
// re-checked by direct composition; the residual must not vanish at 0.
Chart pullback(const Polynomial& p, const Cone& cone, const NewtonPolyhedron& np);

// max_i ell_i / (jacobian_exponents_i + 1) and how many indices attain it.
std::pair<Rational, int> chart_decay(const IntVector& ell, const IntVector& jacobian);
std::pair<Rational, int> chart_decay(const Chart& chart);

std::vector<Chart> compute_charts(const Polynomial& p, const NewtonPolyhedron& np, const Fan& smooth);

// Expands det(d x_j / d y_i) and compares it with +-y^{jacobian_exponents}.
bool jacobian_is_monomial(const Chart& chart);

}  // namespace newton_osc
