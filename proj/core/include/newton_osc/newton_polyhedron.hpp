#pragma once

#include <optional>
#include <span>
#include <vector>

#include "newton_osc/polynomial.hpp"

namespace newton_osc {

// Supporting inequality <normal, x> >= offset of the Newton polyhedron.
// The normal is primitive with nonnegative entries and the offset is
// l(normal) = min over vertices v of <normal, v>.
struct Facet {
  IntVector normal;
  std::int64_t offset = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
};

// A nonempty face, identified by the full set of facets tight on it.
//
// The face equals conv(vertices) + cone(e_j : j in free_axes); it is compact
// exactly when free_axes is empty.
struct Face {
  std::vector<std::size_t> tight_facets;  // sorted indices into facets()
  std::vector<std::size_t> vertices;      // sorted indices into vertices()
  std::vector<std::size_t> free_axes;     // recession directions e_j
  int dimension = 0;
  bool compact = false;

  friend bool operator==(const Face&, const Face&) = default;
};

// conv(support) + R_+^n, held in both vertex and facet form.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dimension, std::vector<ExponentVector> vertices, std::vector<Facet> facets);

  std::size_t dimension() const { return dimension_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  // H-description membership test.
  bool contains(std::span<const Rational> point) const;

  // min over vertices of <direction, v>.
  std::int64_t support_value(std::span<const std::int64_t> direction) const;

  bool is_tight(std::size_t facet, std::span<const Rational> point) const;
  bool is_tight(std::size_t facet, std::span<const std::int64_t> point) const;

  // The face cut out by the given facets, closed up to its full tight set;
  // nullopt when those facets have no common point on the polyhedron.
  std::optional<Face> face_of(std::span<const std::size_t> facets) const;

  // Smallest face containing a point of the polyhedron. The polyhedron
  // itself (empty tight set, codimension 0) is returned for interior points.
  Face minimal_face_containing(std::span<const Rational> point) const;

  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;

 private:
  std::size_t dimension_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
};

struct DistanceResult {
  Rational distance;  // d_f
  Face principal_face;
  int codimension = 0;  // k = n - dim(principal face)
};

struct WeightedIndex {
  Rational floor_value;  // max{c > 0 : (beta + 1) / c in N_f}
  int d_beta = 0;        // greatest codimension of a face through (beta + 1) / c
  Face face;             // minimal face through that point
};

// Rejects the zero polynomial (kInput), a nonzero constant term and linear
// terms (kHypothesis); the decay theory needs f(0) = 0 and grad f(0) = 0.
void check_phase_hypotheses(const Polynomial& p);

// Builds the polyhedron from a point set: dominance filter, LP certification
// of extreme points, then double description on the homogenized cone.
NewtonPolyhedron polyhedron_from_points(std::size_t dimension, const std::vector<ExponentVector>& points);

NewtonPolyhedron newton_polyhedron(const Polynomial& p);

DistanceResult newton_distance(const NewtonPolyhedron& np);

// All nonempty proper faces, ordered lexicographically by tight-facet set.
std::vector<Face> enumerate_faces(const NewtonPolyhedron& np);
std::vector<Face> enumerate_compact_faces(const NewtonPolyhedron& np);

// Sub-sum of p over exponents lying on the (compact) face.
Polynomial gamma_part(const Polynomial& p, const NewtonPolyhedron& np, const Face& face);

WeightedIndex weighted_index(const NewtonPolyhedron& np, std::span<const std::int64_t> beta);

}  // namespace newton_osc
