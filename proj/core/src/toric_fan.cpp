#include "newton_osc/toric_fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "newton_osc/cone_geometry.hpp"
#include "newton_osc/errors.hpp"
#include "newton_osc/linear_algebra.hpp"
#include "newton_osc/linear_program.hpp"

namespace newton_osc {

std::size_t Cone::dimension() const { return rank(to_rational_matrix(generators)); }

Cone Fan::cone(std::size_t i) const {
  Cone c;
  for (auto r : cones[i]) c.generators.push_back(rays[r]);
  return c;
}

Fan normal_fan(const NewtonPolyhedron& np) {
  Fan fan;
  fan.dimension = np.dimension();
  for (const auto& f : np.facets()) fan.rays.push_back(f.normal);
  for (const auto& v : np.vertices()) {
    std::vector<std::size_t> cone;
    for (std::size_t f = 0; f < np.facets().size(); ++f) {
      if (np.is_tight(f, v)) cone.push_back(f);
    }
    fan.cones.push_back(std::move(cone));
  }
  return canonicalize(std::move(fan));
}

std::int64_t cone_index(const Cone& c) {
  if (c.generators.empty() || c.generators.size() != c.generators.front().size()) {
    throw Error(ErrorKind::kInput, "non_simplicial_cone", "cone_index needs n generators in dimension n");
  }
  // columns are generators; the determinant is transpose-invariant
  const Rational det = determinant(to_rational_matrix(c.generators));
  if (det == 0) throw Error(ErrorKind::kInput, "non_simplicial_cone", "cone generators are linearly dependent");
  return to_int64(abs(det));
}

Fan canonicalize(Fan fan) {
  std::vector<std::size_t> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fan.rays[a] < fan.rays[b]; });
  std::vector<std::size_t> new_index(fan.rays.size());
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    rays.push_back(fan.rays[order[i]]);
  }
  // drop rays no cone uses
  std::set<std::size_t> used;
  for (auto& cone : fan.cones) {
    for (auto& r : cone) {
      r = new_index[r];
      used.insert(r);
    }
  }
  std::vector<std::size_t> compact(rays.size());
  std::vector<IntVector> kept;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (used.count(i)) {
      compact[i] = kept.size();
      kept.push_back(rays[i]);
    }
  }
  for (auto& cone : fan.cones) {
    for (auto& r : cone) r = compact[r];
    std::sort(cone.begin(), cone.end());
  }
  std::sort(fan.cones.begin(), fan.cones.end());
  fan.cones.erase(std::unique(fan.cones.begin(), fan.cones.end()), fan.cones.end());
  fan.rays = std::move(kept);
  return fan;
}

namespace {

// Pulling triangulation of cone(rays[ids]) with ids in global order.
void pull(const Fan& fan, std::vector<std::size_t> ids, std::vector<std::vector<std::size_t>>& out) {
  std::sort(ids.begin(), ids.end());
  std::vector<IntVector> gens;
  for (auto i : ids) gens.push_back(fan.rays[i]);
  const std::size_t dim = rank(to_rational_matrix(gens));
  if (dim == ids.size()) {
    out.push_back(ids);
    return;
  }
  const std::size_t apex = ids.front();
  for (const auto& facet : cone_facets(gens)) {
    if (std::binary_search(facet.begin(), facet.end(), std::size_t{0})) continue;  // contains apex
    std::vector<std::size_t> sub;
    for (auto k : facet) sub.push_back(ids[k]);
    std::vector<std::vector<std::size_t>> pieces;
    pull(fan, sub, pieces);
    for (auto& piece : pieces) {
      piece.push_back(apex);
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
  }
}

}  // namespace

Fan simplicial_subdivision(const Fan& fan) {
  Fan out;
  out.dimension = fan.dimension;
  out.rays = fan.rays;
  for (const auto& cone : fan.cones) pull(fan, cone, out.cones);
  return out;
}

std::vector<IntVector> parallelepiped_points(const Cone& c) {
  const std::size_t n = c.generators.size();
  const RationalMatrix v = to_rational_matrix(c.generators);
  // With V having the generators as rows, p = sum c_i v_i means c = p V^{-1}.
  RationalMatrix vt(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vt[j][i] = v[i][j];
  }
  if (determinant(vt) == 0) throw Error(ErrorKind::kInput, "non_simplicial_cone", "degenerate cone");

  IntVector upper(n, 0);  // p_j < sum_i v_ij
  for (const auto& g : c.generators) {
    for (std::size_t j = 0; j < n; ++j) upper[j] += g[j];
  }
  // Inverse of vt once, so each candidate is a matrix-vector product.
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector e(n, 0);
    e[k] = 1;
    auto col = solve(vt, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][k] = (*col)[i];
  }

  std::vector<IntVector> out;
  IntVector p(n, 0);
  while (true) {
    if (std::any_of(p.begin(), p.end(), [](std::int64_t x) { return x != 0; })) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        Rational ci = 0;
        for (std::size_t k = 0; k < n; ++k) ci += inv[i][k] * static_cast<long>(p[k]);
        inside = ci >= 0 && ci < 1;
      }
      if (inside) out.push_back(p);
    }
    std::size_t j = 0;
    while (j < n && ++p[j] >= std::max<std::int64_t>(upper[j], 1)) {
      p[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan smooth_refinement(const Fan& input) {
  Fan fan = simplicial_subdivision(input);
  const std::size_t n = fan.dimension;
  while (true) {
    long bad = -1;
    std::int64_t index = 1;
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
      index = cone_index(fan.cone(i));
      if (index > 1) {
        bad = static_cast<long>(i);
        break;
      }
    }
    if (bad < 0) break;

    const Cone cone = fan.cone(static_cast<std::size_t>(bad));
    const auto& ids = fan.cones[static_cast<std::size_t>(bad)];
    IntVector best;
    RationalVector best_coords;
    Rational best_score = -1;
    for (const auto& p : parallelepiped_points(cone)) {
      if (gcd(p) != 1) continue;
      auto coords = coordinates_in_basis(cone.generators, to_rational(p));
      Rational score = 0;
      for (const auto& c : *coords) {
        if (c > 0 && c * static_cast<long>(index) > score) score = c * static_cast<long>(index);
      }
      if (best_score < 0 || score < best_score) {
        best_score = score;
        best = p;
        best_coords = *coords;
      }
    }
    if (best.empty()) throw Error(ErrorKind::kInternal, "no_subdivision_point", "index > 1 but no lattice point");

    // Support face of the new ray: generators with positive coefficient.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if (best_coords[i] > 0) support.push_back(ids[i]);
    }
    std::sort(support.begin(), support.end());
    const std::size_t new_ray = fan.rays.size();
    fan.rays.push_back(best);

    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : fan.cones) {
      if (!std::includes(c.begin(), c.end(), support.begin(), support.end())) {
        next.push_back(c);
        continue;
      }
      for (auto drop : support) {
        std::vector<std::size_t> piece;
        for (auto r : c) {
          if (r != drop) piece.push_back(r);
        }
        piece.push_back(new_ray);
        std::sort(piece.begin(), piece.end());
        next.push_back(std::move(piece));
      }
    }
    fan.cones = std::move(next);
  }
  return canonicalize(std::move(fan));
}

std::string check_unimodular(const Fan& fan) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto c = fan.cone(i);
    if (c.generators.size() != fan.dimension) return "cone " + std::to_string(i) + " is not full simplicial";
    const auto idx = cone_index(c);
    if (idx != 1) return "cone " + std::to_string(i) + " has index " + std::to_string(idx);
  }
  return {};
}

std::string check_codimension_one_faces(const Fan& fan) {
  const std::size_t n = fan.dimension;
  // facet (sorted ray ids) -> signs of the dropped ray relative to it
  std::map<std::vector<std::size_t>, std::vector<int>> faces;
  for (const auto& cone : fan.cones) {
    if (cone.size() != n) return "non-simplicial maximal cone";
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> face;
      RationalMatrix rows;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == drop) continue;
        face.push_back(cone[k]);
        rows.push_back(to_rational(fan.rays[cone[k]]));
      }
      const RationalVector normal = kernel_vector(rows, n);
      // orient the hyperplane canonically by its first nonzero entry
      Rational side = dot(fan.rays[cone[drop]], normal);
      const auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
      if (*lead < 0) side = -side;
      faces[face].push_back(sgn(side));
    }
  }
  for (const auto& [face, sides] : faces) {
    bool on_boundary = false;
    for (std::size_t j = 0; j < n && !on_boundary; ++j) {
      bool zero = true;
      for (auto r : face) zero = zero && fan.rays[r][j] == 0;
      on_boundary = zero;
    }
    if (on_boundary) {
      if (sides.size() != 1) return "boundary face shared by " + std::to_string(sides.size()) + " cones";
    } else {
      if (sides.size() != 2) return "interior face shared by " + std::to_string(sides.size()) + " cones";
      if (sides[0] * sides[1] != -1) return "cones on the same side of a shared face";
    }
  }
  return {};
}

namespace {

// Exists h with h = 0 on the shared rays, h >= 1 on the rest of a and
// h <= -1 on the rest of b. h is split as h+ - h- for the LP.
bool separable(const Fan& fan, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t n = fan.dimension;
  std::vector<std::size_t> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  LinearProgram lp;
  lp.num_variables = 2 * n;
  auto row = [&](std::size_t r) {
    RationalVector coeffs(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[j] = Rational(static_cast<long>(fan.rays[r][j]));
      coeffs[n + j] = -coeffs[j];
    }
    return coeffs;
  };
  for (auto r : a) {
    if (std::binary_search(shared.begin(), shared.end(), r)) {
      lp.add(row(r), Relation::kEqual, 0);
    } else {
      lp.add(row(r), Relation::kGreaterEqual, 1);
    }
  }
  for (auto r : b) {
    if (std::binary_search(shared.begin(), shared.end(), r)) continue;
    lp.add(row(r), Relation::kLessEqual, -1);
  }
  return is_feasible(lp);
}

}  // namespace

std::string check_pairwise_compatible(const Fan& fan) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      if (!separable(fan, fan.cones[i], fan.cones[j])) {
        return "cones " + std::to_string(i) + " and " + std::to_string(j) + " overlap beyond a common face";
      }
    }
  }
  return {};
}

std::string check_refines(const Fan& fine, const Fan& coarse) {
  for (const auto& r : coarse.rays) {
    if (std::find(fine.rays.begin(), fine.rays.end(), r) == fine.rays.end()) return "coarse ray missing";
  }
  for (std::size_t i = 0; i < fine.cones.size(); ++i) {
    const Cone c = fine.cone(i);
    bool contained = false;
    for (std::size_t k = 0; k < coarse.cones.size() && !contained; ++k) {
      const Cone big = coarse.cone(k);
      contained = std::all_of(c.generators.begin(), c.generators.end(),
                              [&](const IntVector& g) { return cone_contains(big.generators, to_rational(g)); });
    }
    if (!contained) return "fine cone " + std::to_string(i) + " lies in no coarse cone";
  }
  return {};
}

long find_containing_cone(const Fan& fan, const RationalVector& ray) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone c = fan.cone(i);
    if (c.simplicial() && c.generators.size() == fan.dimension) {
      auto coords = coordinates_in_basis(c.generators, ray);
      if (coords && std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x >= 0; })) {
        return static_cast<long>(i);
      }
    } else if (cone_contains(c.generators, ray)) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

}  // namespace newton_osc
