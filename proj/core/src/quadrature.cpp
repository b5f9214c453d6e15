#include "newton_osc/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace newton_osc {

namespace {

GaussRule build_rule(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi's approximation of the i-th largest root, then Newton.
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5);
    double x = std::cos(theta);
    double dp = 1;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
  return *slot;
}

void composite_gauss_legendre(double a, double b, std::size_t panels, std::size_t n, std::vector<double>& nodes,
                              std::vector<double>& weights) {
  const GaussRule& rule = gauss_legendre(n);
  nodes.clear();
  weights.clear();
  nodes.reserve(panels * n);
  weights.reserve(panels * n);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + h / 2;
    for (std::size_t k = 0; k < n; ++k) {
      nodes.push_back(mid + h / 2 * rule.nodes[k]);
      weights.push_back(h / 2 * rule.weights[k]);
    }
  }
}

}  // namespace newton_osc
