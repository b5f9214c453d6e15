#include "newton_osc/cone_geometry.hpp"

#include <algorithm>
#include <set>

#include "newton_osc/errors.hpp"
#include "newton_osc/linear_program.hpp"

namespace newton_osc {

namespace {

Rational inner(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector normalized(const RationalVector& v) {
  auto p = primitive_direction(v);
  return to_rational(p);
}

}  // namespace

std::vector<RationalVector> dual_extreme_rays(const RationalMatrix& generators) {
  if (generators.empty()) throw Error(ErrorKind::kInternal, "empty_cone", "dual_extreme_rays: no generators");
  const std::size_t d = generators.front().size();

  // Greedy basis of the row space.
  std::vector<std::size_t> basis_rows;
  RationalMatrix basis;
  for (std::size_t i = 0; i < generators.size() && basis.size() < d; ++i) {
    basis.push_back(generators[i]);
    if (rank(basis) == basis.size()) {
      basis_rows.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  if (basis.size() < d) {
    throw Error(ErrorKind::kInternal, "not_full_dimensional", "dual_extreme_rays: generators do not span");
  }

  // Initial rays: columns of basis^{-1}, i.e. solutions of basis * r = e_k.
  std::vector<RationalVector> rays;
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector e(d, 0);
    e[k] = 1;
    auto r = solve(basis, e);
    rays.push_back(normalized(*r));
  }

  std::vector<std::size_t> processed = basis_rows;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    if (std::find(basis_rows.begin(), basis_rows.end(), gi) != basis_rows.end()) continue;
    const auto& g = generators[gi];

    std::vector<Rational> values;
    values.reserve(rays.size());
    for (const auto& r : rays) values.push_back(inner(g, r));

    std::vector<RationalVector> next;
    std::vector<std::size_t> positive, negative;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] >= 0) next.push_back(rays[k]);
      if (values[k] > 0) positive.push_back(k);
      if (values[k] < 0) negative.push_back(k);
    }

    for (auto p : positive) {
      for (auto q : negative) {
        RationalMatrix common;
        for (auto row : processed) {
          if (inner(generators[row], rays[p]) == 0 && inner(generators[row], rays[q]) == 0) {
            common.push_back(generators[row]);
          }
        }
        if (common.size() + 2 < d) continue;
        if (rank(common) != d - 2) continue;
        RationalVector combined(d);
        for (std::size_t i = 0; i < d; ++i) combined[i] = values[p] * rays[q][i] - values[q] * rays[p][i];
        next.push_back(normalized(combined));
      }
    }
    processed.push_back(gi);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }
  return rays;
}

std::vector<std::vector<std::size_t>> cone_facets(const std::vector<IntVector>& generators) {
  if (generators.empty()) return {};
  const std::size_t ambient = generators.front().size();

  // Coordinates of every generator in a basis of their span.
  RationalMatrix rows = to_rational_matrix(generators);
  std::vector<std::size_t> basis_idx;
  RationalMatrix basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    basis.push_back(rows[i]);
    if (rank(basis) == basis.size()) {
      basis_idx.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  const std::size_t dim = basis.size();
  if (dim <= 1) {
    // A ray: its only facet is the apex, which holds no generators.
    return {std::vector<std::size_t>{}};
  }

  RationalMatrix local(rows.size(), RationalVector(dim));
  {
    // Solve basis^T c = g in the least-squares-free sense: pick dim
    // independent coordinates of the ambient space.
    RationalMatrix bt(ambient, RationalVector(dim));
    for (std::size_t i = 0; i < ambient; ++i) {
      for (std::size_t k = 0; k < dim; ++k) bt[i][k] = basis[k][i];
    }
    std::vector<std::size_t> coords;
    RationalMatrix picked;
    for (std::size_t i = 0; i < ambient && picked.size() < dim; ++i) {
      picked.push_back(bt[i]);
      if (rank(picked) == picked.size()) {
        coords.push_back(i);
      } else {
        picked.pop_back();
      }
    }
    for (std::size_t g = 0; g < rows.size(); ++g) {
      RationalVector rhs(dim);
      for (std::size_t k = 0; k < dim; ++k) rhs[k] = rows[g][coords[k]];
      auto c = solve(picked, rhs);
      local[g] = *c;
    }
  }

  auto normals = dual_extreme_rays(local);
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& nrm : normals) {
    std::vector<std::size_t> on;
    for (std::size_t g = 0; g < local.size(); ++g) {
      if (inner(local[g], nrm) == 0) on.push_back(g);
    }
    facets.push_back(std::move(on));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

bool cone_contains(const std::vector<IntVector>& generators, const RationalVector& point) {
  LinearProgram lp;
  lp.num_variables = generators.size();
  for (std::size_t i = 0; i < point.size(); ++i) {
    RationalVector row(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) row[g] = Rational(static_cast<long>(generators[g][i]));
    lp.add(std::move(row), Relation::kEqual, point[i]);
  }
  return is_feasible(lp);
}

}  // namespace newton_osc
