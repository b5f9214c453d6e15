#pragma once

#include <optional>
#include <vector>

#include "newton_osc/rational.hpp"

namespace newton_osc {

// Dense univariate polynomial, coefficients lowest degree first, no trailing
// zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(RationalVector coefficients);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const RationalVector& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  RationalVector c_;
};

UPoly derivative(const UPoly& p);
UPoly monic(const UPoly& p);
// Polynomial long division; divisor must be nonzero.
std::pair<UPoly, UPoly> divide(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

// Removes every factor x: returns p / x^k with p(0) != 0 for nonzero p.
UPoly strip_zero_roots(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Number of distinct real roots in (a, b] of a squarefree polynomial.
int count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lower;
  Rational upper;  // lower == upper when the root is known exactly
};

// Disjoint isolating intervals for the distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

// Shrinks an isolating interval to width below `width`.
RootInterval refine(const UPoly& squarefree, RootInterval interval, const Rational& width);

// The root in the interval if it is rational, else nullopt.
std::optional<Rational> rational_root_in(const UPoly& p, const RootInterval& interval);

// Simplest rational (smallest denominator) in the closed interval [a, b].
Rational simplest_between(const Rational& a, const Rational& b);

}  // namespace newton_osc
