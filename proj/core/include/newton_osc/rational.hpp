#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace newton_osc {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer lattice vectors: exponents, facet normals, fan rays.
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "-p/q" and finite decimals such as "0.3679" or "1e-4"; the
// decimal forms are converted exactly.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);
std::int64_t to_int64(const Integer& value);
std::int64_t to_int64(const Rational& value);  // value must be integral
double to_double(const Rational& value);

std::int64_t gcd(std::span<const std::int64_t> entries);

// v / gcd(v). Entries must be nonnegative and not all zero.
IntVector primitive(std::span<const std::int64_t> v);

RationalVector to_rational(std::span<const std::int64_t> v);

// Scales a nonzero rational vector to the unique primitive integer vector
// pointing in the same direction.
IntVector primitive_direction(std::span<const Rational> v);

Rational dot(std::span<const std::int64_t> a, std::span<const Rational> b);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace newton_osc
