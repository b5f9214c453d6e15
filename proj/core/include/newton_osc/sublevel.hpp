#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newton_osc/rational.hpp"

namespace newton_osc {

// coefficient * u^power * log(1/u)^log_power
struct SublevelTerm {
  Rational coefficient;
  Rational power;
  int log_power = 0;
};

struct SublevelMeasure {
  std::vector<SublevelTerm> terms;  // sorted by (power, log_power)
  double value = 0;
  bool saturated = false;           // u >= 1, measure 1

  std::string expression() const;
};

// |{x in [0,1]^n : x^alpha < u}|. With x_j uniform, -log x_j is a standard
// exponential, so this is P(sum alpha_j T_j > log(1/u)); the density of the
// sum is convolved exactly and integrated in closed form. Zero entries of
// alpha are dropped.
SublevelMeasure sublevel_measure(std::span<const std::int64_t> alpha, const Rational& u);

// Symbolic expression for u in (0, 1], evaluated at a floating u.
std::vector<SublevelTerm> sublevel_expression(std::span<const std::int64_t> alpha);
double evaluate_sublevel(const std::vector<SublevelTerm>& terms, double u);

struct MonteCarloEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

MonteCarloEstimate sublevel_monte_carlo(std::span<const std::int64_t> alpha, double u, std::uint64_t samples,
                                        std::uint64_t seed);

}  // namespace newton_osc
