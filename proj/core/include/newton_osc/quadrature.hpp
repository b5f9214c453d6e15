#pragma once

#include <cstddef>
#include <vector>

namespace newton_osc {

// n-point Gauss-Legendre rule on [-1, 1], ascending nodes.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached; safe to call from several threads.
const GaussRule& gauss_legendre(std::size_t n);

// Composite rule: `panels` equal panels on [a, b], each with the n-point rule.
void composite_gauss_legendre(double a, double b, std::size_t panels, std::size_t n, std::vector<double>& nodes,
                              std::vector<double>& weights);

}  // namespace newton_osc
