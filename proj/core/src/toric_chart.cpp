#include "newton_osc/toric_chart.hpp"

#include <algorithm>
#include <numeric>

#include "newton_osc/errors.hpp"

namespace newton_osc {

namespace {

std::vector<IntVector> exponent_matrix(const Cone& cone) {
  const std::size_t n = cone.generators.size();
  std::vector<IntVector> a(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j][i] = cone.generators[i][j];
  }
  return a;
}

std::vector<Polynomial> chart_map(const std::vector<IntVector>& a) {
  std::vector<Polynomial> out;
  for (const auto& row : a) out.push_back(Polynomial::monomial(row));
  return out;
}

}  // namespace

IntVector ell_values(const Cone& cone, const NewtonPolyhedron& np) {
  if (np.vertices().empty()) throw Error(ErrorKind::kInput, "empty_polyhedron", "no vertices");
  IntVector out;
  for (const auto& g : cone.generators) out.push_back(np.support_value(g));
  return out;
}

IntVector jacobian_exponents(const Cone& cone) {
  if (cone_index(cone) != 1) throw Error(ErrorKind::kInput, "non_smooth_cone", "Jacobian exponents need a smooth cone");
  IntVector out;
  for (const auto& g : cone.generators) out.push_back(std::accumulate(g.begin(), g.end(), std::int64_t{0}) - 1);
  return out;
}

std::pair<Rational, int> chart_decay(const IntVector& ell, const IntVector& jacobian) {
  Rational best = 0;
  int count = 0;
  for (std::size_t i = 0; i < ell.size(); ++i) {
    Rational r(static_cast<long>(ell[i]), static_cast<long>(jacobian[i] + 1));
    r.canonicalize();
    if (r > best) {
      best = r;
      count = 1;
    } else if (r == best && r > 0) {
      ++count;
    }
  }
  return {best, count};
}

std::pair<Rational, int> chart_decay(const Chart& chart) { return chart_decay(chart.ell, chart.jacobian_exponents); }

Chart pullback(const Polynomial& p, const Cone& cone, const NewtonPolyhedron& np) {
  Chart chart;
  chart.cone = cone;
  chart.exponent_matrix = exponent_matrix(cone);
  chart.jacobian_exponents = jacobian_exponents(cone);
  chart.ell = ell_values(cone, np);

  const std::size_t n = p.dimension();
  const Polynomial pulled = monomial_substitution(p, chart.exponent_matrix);
  Polynomial::Terms terms;
  for (const auto& [e, c] : pulled.terms()) {
    ExponentVector shifted = e;
    for (std::size_t i = 0; i < n; ++i) {
      shifted[i] -= chart.ell[i];
      if (shifted[i] < 0) {
        throw Error(ErrorKind::kInternal, "pullback_not_divisible", "pulled-back term not divisible by y^ell");
      }
    }
    terms.emplace(std::move(shifted), c);
  }
  chart.residual = Polynomial(n, std::move(terms));
  if (chart.residual.is_zero()) throw Error(ErrorKind::kInternal, "zero_residual", "chart residual vanishes");

  const Polynomial lhs = compose(p, chart_map(chart.exponent_matrix));
  const Polynomial rhs = Polynomial::monomial(chart.ell) * chart.residual;
  if (!(lhs == rhs)) throw Error(ErrorKind::kInternal, "pullback_identity", "f(pi(y)) != y^ell * residual");
  if (chart.residual.constant_term() == 0) {
    throw Error(ErrorKind::kInternal, "residual_vanishes_at_origin", "chart residual has zero constant term");
  }
  std::tie(chart.chart_d, chart.chart_m) = chart_decay(chart);
  return chart;
}

std::vector<Chart> compute_charts(const Polynomial& p, const NewtonPolyhedron& np, const Fan& smooth) {
  std::vector<Chart> out;
  for (std::size_t i = 0; i < smooth.cones.size(); ++i) out.push_back(pullback(p, smooth.cone(i), np));
  return out;
}

bool jacobian_is_monomial(const Chart& chart) {
  const std::size_t n = chart.exponent_matrix.size();
  const auto map = chart_map(chart.exponent_matrix);
  std::vector<std::vector<Polynomial>> jac;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(partial_derivative(map[j], i));
    jac.push_back(std::move(row));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(n);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    Polynomial term = Polynomial::constant(n, inversions % 2 ? -1 : 1);
    for (std::size_t j = 0; j < n; ++j) term = term * jac[j][perm[j]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (det.size() != 1) return false;
  const auto& [e, c] = *det.terms().begin();
  return e == chart.jacobian_exponents && (c == 1 || c == -1);
}

}  // namespace newton_osc
