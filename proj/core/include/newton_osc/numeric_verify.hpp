#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "newton_osc/decay_predict.hpp"

namespace newton_osc {

// prod_j exp(1 - 1/(1 - (x_j/r_j)^2)) on the open box, 0 outside.
struct BumpSpec {
  std::vector<double> radius;

  static BumpSpec uniform(std::size_t dimension, double r = 0.5) { return {std::vector<double>(dimension, r)}; }
};

double bump_value(const BumpSpec& spec, std::span<const double> point);

struct QuadratureOptions {
  double quad_tol = 1e-6;
  std::size_t initial_nodes = 64;  // per axis, also the per-panel rule size
  std::size_t max_nodes = 0;       // per axis; 0 picks a default from the dimension
};

std::size_t default_max_nodes(std::size_t dimension);

struct IntegralResult {
  std::complex<double> value;
  std::size_t nodes_per_axis = 0;
  double last_delta = 0;      // |I_N - I_{N/2}|
  bool converged = false;
  bool below_noise_floor = false;
};

// Tensor composite Gauss-Legendre estimate of
//   int e^{i lambda f(x)} prod |x_j|^{beta_j} phi(x) dx
// with nodes doubled until successive estimates agree to quad_tol.
IntegralResult integrate_oscillatory(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                                     double lambda, const QuadratureOptions& options = {});

// As above but throws ConvergenceError when the node cap is hit.
std::complex<double> oscillatory_integral(const Polynomial& phase, std::span<const std::int64_t> beta,
                                          const BumpSpec& bump, double lambda, const QuadratureOptions& options = {});

// int prod |x_j|^{beta_j} phi(x) dx, i.e. I(0).
double weighted_mass(std::span<const std::int64_t> beta, const BumpSpec& bump);

std::vector<double> geometric_grid(double lmin, double lmax, std::size_t points);

struct SweepOptions {
  double lambda_min = 1e2;
  double lambda_max = 1e5;
  std::size_t points = 24;
  QuadratureOptions quadrature;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepPoint {
  double lambda = 0;
  IntegralResult integral;
};

struct FitResult {
  std::size_t points_used = 0;
  // (a) log power frozen at the prediction
  double frozen_log_power = 0;
  double fitted_exponent = 0;
  double residual_rms = 0;
  // (b) exponent frozen at the prediction
  double frozen_exponent = 0;
  double fitted_log_power = 0;
  double log_power_residual_rms = 0;
  // all three coefficients free
  double joint_exponent = 0;
  double joint_log_power = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  FitResult fit;
  std::vector<std::string> warnings;
};

// Integrals at every grid point (in parallel, results independent of the
// thread count), then least-squares fits of
//   log|I| = c - p log(lambda) + m log(log(lambda))
// over the grid without its first decade.
SweepResult sweep(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                  const SweepOptions& options);
FitResult fit_decay(const std::vector<SweepPoint>& points, double fit_from, const DecayPrediction& predicted,
                    std::vector<std::string>& warnings);
SweepResult sweep_and_fit(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                          const SweepOptions& options, const DecayPrediction& predicted);

struct VdcStatistic {
  Rational d;
  int multiplicity = 0;
  std::vector<double> lambdas;
  std::vector<double> values;  // |I| lambda^{1/d} / log(lambda)^{M-1}
  double sup = 0;
  double max_min_ratio = 0;
  double spearman = 0;         // rank correlation with log(lambda)
};

VdcStatistic vdc_statistic(const std::vector<SweepPoint>& points, std::span<const std::int64_t> alpha,
                           std::span<const std::int64_t> beta);
VdcStatistic vdc_bound_statistic(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta,
                                 const BumpSpec& bump, const SweepOptions& options);

double spearman_correlation(std::span<const double> x, std::span<const double> y);

// "lambda,re,im,abs,nodes_per_axis,converged"
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace newton_osc
