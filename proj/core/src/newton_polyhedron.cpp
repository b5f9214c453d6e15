#include "newton_osc/newton_polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "newton_osc/cone_geometry.hpp"
#include "newton_osc/errors.hpp"
#include "newton_osc/linear_algebra.hpp"
#include "newton_osc/linear_program.hpp"

namespace newton_osc {

NewtonPolyhedron::NewtonPolyhedron(std::size_t dimension, std::vector<ExponentVector> vertices,
                                   std::vector<Facet> facets)
    : dimension_(dimension), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (vertices_.empty()) throw Error(ErrorKind::kInput, "empty_polyhedron", "Newton polyhedron has no vertices");
  for (const auto& v : vertices_) {
    if (v.size() != dimension_) throw Error(ErrorKind::kInput, "dimension_mismatch", "vertex of wrong length");
  }
  for (const auto& f : facets_) {
    if (f.normal.size() != dimension_) throw Error(ErrorKind::kInput, "dimension_mismatch", "facet of wrong length");
    for (auto e : f.normal) {
      if (e < 0) throw Error(ErrorKind::kInput, "bad_facet", "facet normals must be nonnegative");
    }
  }
}

bool NewtonPolyhedron::contains(std::span<const Rational> point) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, point) < Rational(static_cast<long>(f.offset))) return false;
  }
  return true;
}

std::int64_t NewtonPolyhedron::support_value(std::span<const std::int64_t> direction) const {
  std::int64_t best = dot(direction, vertices_.front());
  for (const auto& v : vertices_) best = std::min(best, dot(direction, v));
  return best;
}

bool NewtonPolyhedron::is_tight(std::size_t facet, std::span<const Rational> point) const {
  return dot(facets_[facet].normal, point) == Rational(static_cast<long>(facets_[facet].offset));
}

bool NewtonPolyhedron::is_tight(std::size_t facet, std::span<const std::int64_t> point) const {
  return dot(facets_[facet].normal, point) == facets_[facet].offset;
}

std::optional<Face> NewtonPolyhedron::face_of(std::span<const std::size_t> seed) const {
  std::vector<std::size_t> verts;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    bool tight = true;
    for (auto f : seed) tight = tight && is_tight(f, vertices_[v]);
    if (tight) verts.push_back(v);
  }
  if (verts.empty()) return std::nullopt;

  Face face;
  face.vertices = verts;
  for (std::size_t j = 0; j < dimension_; ++j) {
    bool free = true;
    for (auto f : seed) free = free && facets_[f].normal[j] == 0;
    if (free) face.free_axes.push_back(j);
  }
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    bool contains_face = true;
    for (auto v : verts) contains_face = contains_face && is_tight(f, vertices_[v]);
    for (auto j : face.free_axes) contains_face = contains_face && facets_[f].normal[j] == 0;
    if (contains_face) face.tight_facets.push_back(f);
  }

  RationalMatrix span;
  for (std::size_t k = 1; k < verts.size(); ++k) {
    RationalVector diff(dimension_);
    for (std::size_t j = 0; j < dimension_; ++j) {
      diff[j] = Rational(static_cast<long>(vertices_[verts[k]][j] - vertices_[verts[0]][j]));
    }
    span.push_back(std::move(diff));
  }
  for (auto j : face.free_axes) {
    RationalVector e(dimension_, 0);
    e[j] = 1;
    span.push_back(std::move(e));
  }
  face.dimension = static_cast<int>(rank(span));
  face.compact = face.free_axes.empty();
  return face;
}

Face NewtonPolyhedron::minimal_face_containing(std::span<const Rational> point) const {
  if (!contains(point)) throw Error(ErrorKind::kInternal, "point_outside", "point is not in the Newton polyhedron");
  std::vector<std::size_t> tight;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (is_tight(f, point)) tight.push_back(f);
  }
  auto face = face_of(tight);
  if (!face) throw Error(ErrorKind::kInternal, "empty_face", "tight facets of a member point have no vertex");
  return *face;
}

void check_phase_hypotheses(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kInput, "zero_polynomial", "the phase is the zero polynomial");
  if (p.constant_term() != 0) {
    throw Error(ErrorKind::kHypothesis, "nonzero_constant_term", "the phase must vanish at the origin (f(0) = 0)");
  }
  for (const auto& [e, c] : p.terms()) {
    std::int64_t total = 0;
    for (auto x : e) total += x;
    if (total == 1) {
      throw Error(ErrorKind::kHypothesis, "nonzero_gradient",
                  "the phase has a linear term, so grad f(0) != 0 and the origin is not critical");
    }
  }
}

NewtonPolyhedron polyhedron_from_points(std::size_t n, const std::vector<ExponentVector>& input) {
  std::vector<ExponentVector> points = input;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw Error(ErrorKind::kInput, "empty_support", "no points to build a polyhedron from");

  // Dominance filter: alpha is redundant if some other alpha' <= alpha.
  std::vector<ExponentVector> candidates;
  for (const auto& a : points) {
    bool dominated = false;
    for (const auto& b : points) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t j = 0; j < n; ++j) le = le && b[j] <= a[j];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) candidates.push_back(a);
  }

  // alpha is a vertex iff alpha is not in conv(others) + R_+^n.
  std::vector<ExponentVector> vertices;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates.size() == 1) {
      vertices.push_back(candidates[i]);
      break;
    }
    LinearProgram lp;
    lp.num_variables = candidates.size() - 1;
    RationalVector ones(lp.num_variables, 1);
    lp.add(ones, Relation::kEqual, 1);
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector row;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (k != i) row.emplace_back(static_cast<long>(candidates[k][j]));
      }
      lp.add(std::move(row), Relation::kLessEqual, Rational(static_cast<long>(candidates[i][j])));
    }
    if (!is_feasible(lp)) vertices.push_back(candidates[i]);
  }

  // Facets of conv(V) + R_+^n are the extreme rays (xi, -l) of the dual of
  // the homogenized cone generated by (v, 1) and (e_j, 0).
  RationalMatrix generators;
  for (const auto& v : vertices) {
    RationalVector g = to_rational(v);
    g.emplace_back(1);
    generators.push_back(std::move(g));
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector g(n + 1, 0);
    g[j] = 1;
    generators.push_back(std::move(g));
  }
  std::vector<Facet> facets;
  for (const auto& ray : dual_extreme_rays(generators)) {
    RationalVector xi(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n));
    if (std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return x == 0; })) continue;  // t >= 0
    Facet f;
    f.normal = primitive_direction(xi);
    for (auto e : f.normal) {
      if (e < 0) throw Error(ErrorKind::kInternal, "bad_facet", "facet normal with a negative entry");
    }
    f.offset = dot(f.normal, vertices.front());
    for (const auto& v : vertices) f.offset = std::min(f.offset, dot(f.normal, v));
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return NewtonPolyhedron(n, std::move(vertices), std::move(facets));
}

NewtonPolyhedron newton_polyhedron(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kInput, "zero_polynomial", "the phase is the zero polynomial");
  if (p.constant_term() != 0) {
    throw Error(ErrorKind::kHypothesis, "nonzero_constant_term", "the phase must vanish at the origin (f(0) = 0)");
  }
  return polyhedron_from_points(p.dimension(), p.support());
}

DistanceResult newton_distance(const NewtonPolyhedron& np) {
  Rational best = 0;
  bool any = false;
  for (const auto& f : np.facets()) {
    if (f.offset <= 0) continue;
    std::int64_t norm1 = 0;
    for (auto e : f.normal) norm1 += e;
    Rational ratio(static_cast<long>(f.offset), static_cast<long>(norm1));
    ratio.canonicalize();
    if (!any || ratio > best) best = ratio;
    any = true;
  }
  if (!any) {
    throw Error(ErrorKind::kHypothesis, "zero_newton_distance",
                "every facet passes through the origin; the phase does not vanish at 0");
  }
  RationalVector diagonal(np.dimension(), best);
  DistanceResult result;
  result.distance = best;
  result.principal_face = np.minimal_face_containing(diagonal);
  result.codimension = static_cast<int>(np.dimension()) - result.principal_face.dimension;
  return result;
}

std::vector<Face> enumerate_faces(const NewtonPolyhedron& np) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Face> faces;
  std::deque<Face> queue;
  auto visit = [&](std::span<const std::size_t> seed) {
    auto face = np.face_of(seed);
    if (!face || face->tight_facets.empty()) return;
    if (seen.insert(face->tight_facets).second) {
      faces.push_back(*face);
      queue.push_back(*face);
    }
  };
  for (std::size_t f = 0; f < np.facets().size(); ++f) {
    std::size_t seed[] = {f};
    visit(seed);
  }
  while (!queue.empty()) {
    Face face = std::move(queue.front());
    queue.pop_front();
    for (std::size_t f = 0; f < np.facets().size(); ++f) {
      if (std::binary_search(face.tight_facets.begin(), face.tight_facets.end(), f)) continue;
      auto seed = face.tight_facets;
      seed.push_back(f);
      visit(seed);
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.tight_facets < b.tight_facets; });
  return faces;
}

std::vector<Face> enumerate_compact_faces(const NewtonPolyhedron& np) {
  std::vector<Face> out;
  for (auto& f : enumerate_faces(np)) {
    if (f.compact) out.push_back(std::move(f));
  }
  return out;
}

Polynomial gamma_part(const Polynomial& p, const NewtonPolyhedron& np, const Face& face) {
  if (!face.compact) throw Error(ErrorKind::kInput, "noncompact_face", "gamma_part needs a compact face");
  Polynomial::Terms terms;
  for (const auto& [e, c] : p.terms()) {
    bool on_face = true;
    for (auto f : face.tight_facets) on_face = on_face && np.is_tight(f, e);
    if (on_face) terms.emplace(e, c);
  }
  return Polynomial(p.dimension(), std::move(terms));
}

WeightedIndex weighted_index(const NewtonPolyhedron& np, std::span<const std::int64_t> beta) {
  if (beta.size() != np.dimension()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "beta has the wrong length");
  }
  IntVector shifted(beta.begin(), beta.end());
  for (auto& b : shifted) {
    if (b < 0) throw Error(ErrorKind::kInput, "negative_beta", "beta entries must be nonnegative");
    b += 1;
  }
  Rational best;
  bool any = false;
  for (const auto& f : np.facets()) {
    if (f.offset <= 0) continue;
    Rational ratio(static_cast<long>(dot(f.normal, shifted)), static_cast<long>(f.offset));
    ratio.canonicalize();
    if (!any || ratio < best) best = ratio;
    any = true;
  }
  if (!any) {
    throw Error(ErrorKind::kHypothesis, "zero_newton_distance",
                "every facet passes through the origin; the phase does not vanish at 0");
  }
  RationalVector point;
  for (auto b : shifted) point.push_back(Rational(static_cast<long>(b)) / best);
  WeightedIndex out;
  out.floor_value = best;
  out.face = np.minimal_face_containing(point);
  out.d_beta = static_cast<int>(np.dimension()) - out.face.dimension;
  return out;
}

}  // namespace newton_osc
