#pragma once

#include <vector>

#include "newton_osc/rational.hpp"

namespace newton_osc {

// Exact rational linear programming: maximize c.x subject to row constraints
// and x >= 0. Dense two-phase simplex with Bland's rule, so it terminates on
// degenerate problems. Sized for the handful of variables that polyhedral
// membership and separation questions need.

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  RationalVector coefficients;
  Relation relation;
  Rational rhs;
};

struct LinearProgram {
  std::size_t num_variables = 0;
  std::vector<LinearConstraint> constraints;
  RationalVector objective;  // empty means pure feasibility

  void add(RationalVector coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RationalVector solution;
};

LpResult maximize(const LinearProgram& lp);
bool is_feasible(const LinearProgram& lp);

}  // namespace newton_osc
