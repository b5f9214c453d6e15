#pragma once

#include <cstdint>
#include <vector>

#include "newton_osc/newton_polyhedron.hpp"

namespace newton_osc {

// Cone spanned by primitive nonnegative integer generators (its skeleton).
struct Cone {
  std::vector<IntVector> generators;

  std::size_t dimension() const;
  bool simplicial() const { return dimension() == generators.size(); }
};

// A fan supported on the positive orthant. Maximal cones are sorted lists of
// indices into `rays`.
struct Fan {
  std::size_t dimension = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;

  Cone cone(std::size_t i) const;
  friend bool operator==(const Fan&, const Fan&) = default;
};

// Rays are the facet normals; the maximal cones are the normal cones of the
// vertices.
Fan normal_fan(const NewtonPolyhedron& np);

// |det| of the generator matrix of a full-dimensional simplicial cone.
std::int64_t cone_index(const Cone& c);

// Pulling triangulation of every maximal cone with the global ray order, so
// shared faces of neighbouring cones are cut the same way.
Fan simplicial_subdivision(const Fan& fan);

// Simplicial subdivision followed by stellar subdivisions until every
// maximal cone is unimodular. Output is in canonical order.
Fan smooth_refinement(const Fan& fan);

// Rays lexicographic, each cone's indices sorted, cones sorted.
Fan canonicalize(Fan fan);

// Lattice points sum c_i v_i with every c_i in [0, 1), excluding the origin.
std::vector<IntVector> parallelepiped_points(const Cone& c);

// Checks used by the tests. Each returns an empty string on success and a
// description of the first violation otherwise.
std::string check_unimodular(const Fan& fan);
std::string check_codimension_one_faces(const Fan& fan);
std::string check_pairwise_compatible(const Fan& fan);
std::string check_refines(const Fan& fine, const Fan& coarse);

// Index of some maximal cone containing the ray, or -1.
long find_containing_cone(const Fan& fan, const RationalVector& ray);

}  // namespace newton_osc
