#pragma once

#include <vector>

#include "newton_osc/linear_algebra.hpp"

namespace newton_osc {

// Extreme rays of the dual cone {y : <g, y> >= 0 for every row g}, computed by
// the double-description method with the algebraic adjacency test. The rows
// must span the whole space and generate a pointed cone. Each returned ray is
// scaled to a primitive integer vector.
std::vector<RationalVector> dual_extreme_rays(const RationalMatrix& generators);

// Facets of the full-dimensional cone spanned by `generators` inside the
// linear span of those generators. Each facet is reported as the sorted list
// of generator indices lying on it.
std::vector<std::vector<std::size_t>> cone_facets(const std::vector<IntVector>& generators);

// Exact membership of `point` in cone(generators) via LP.
bool cone_contains(const std::vector<IntVector>& generators, const RationalVector& point);

}  // namespace newton_osc
