#pragma once

#include <optional>
#include <vector>

#include "newton_osc/rational.hpp"

namespace newton_osc {

// Dense row-major rational matrix.
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational_matrix(const std::vector<IntVector>& rows);

std::size_t rank(RationalMatrix rows);
Rational determinant(RationalMatrix square);

// Unique solution of A x = b for square nonsingular A, nullopt if singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

// Columns-as-generators helper: coordinates c with sum_i c_i * generators[i] = v,
// for linearly independent generators spanning v's ambient space.
std::optional<RationalVector> coordinates_in_basis(const std::vector<IntVector>& generators,
                                                   const RationalVector& v);

// A nonzero vector orthogonal to all rows, for rows of rank (columns - 1).
RationalVector kernel_vector(RationalMatrix rows, std::size_t columns);

}  // namespace newton_osc
