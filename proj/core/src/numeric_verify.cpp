#include "newton_osc/numeric_verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "newton_osc/errors.hpp"
#include "newton_osc/quadrature.hpp"

namespace newton_osc {

double bump_value(const BumpSpec& spec, std::span<const double> point) {
  if (point.size() != spec.radius.size()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "point and bump differ in dimension");
  }
  double v = 1;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const double t = point[j] / spec.radius[j];
    if (std::abs(t) >= 1) return 0;
    v *= std::exp(1 - 1 / (1 - t * t));
  }
  return v;
}

std::size_t default_max_nodes(std::size_t dimension) {
  switch (dimension) {
    case 1: return std::size_t{1} << 20;
    case 2: return std::size_t{1} << 15;
    case 3: return 512;
    default: return 128;
  }
}

namespace {

enum class AxisMode { kFull, kEven, kOdd };

struct Term {
  double coefficient;  // already multiplied by lambda
  IntVector exponent;
};

// Phase, amplitude and symmetry data shared by every refinement level.
struct Integrand {
  std::size_t n = 0;
  std::vector<Term> terms;
  std::vector<AxisMode> modes;
  std::vector<std::int64_t> beta;
  std::vector<double> radius;
  bool real_part_only = false;  // some axis is odd: I = scale * int cos(lambda f)
  double scale = 1;
  std::int64_t inner_degree = 0;
};

Integrand prepare(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump, double lambda) {
  Integrand g;
  g.n = phase.dimension();
  g.beta.assign(beta.begin(), beta.end());
  g.radius = bump.radius;
  for (const auto& [e, c] : phase.terms()) g.terms.push_back({lambda * to_double(c), e});
  // The bump and |x|^beta are even in every axis, so an axis in which every
  // exponent is even folds onto [0, r]; an axis in which every exponent is
  // odd flips the sign of f, pairing e^{i lambda f} with its conjugate.
  int odd_axes = 0;
  for (std::size_t j = 0; j < g.n; ++j) {
    bool all_even = true, all_odd = true;
    for (const auto& t : g.terms) {
      (t.exponent[j] % 2 == 0 ? all_odd : all_even) = false;
    }
    AxisMode mode = AxisMode::kFull;
    if (all_even) {
      mode = AxisMode::kEven;
    } else if (all_odd) {
      mode = AxisMode::kOdd;
      ++odd_axes;
    }
    if (mode != AxisMode::kFull) g.scale *= 2;
    g.modes.push_back(mode);
  }
  g.real_part_only = odd_axes > 0;
  for (const auto& t : g.terms) g.inner_degree = std::max(g.inner_degree, t.exponent[g.n - 1]);
  return g;
}

struct Axis {
  std::vector<double> x;
  std::vector<double> w;  // quadrature weight * bump factor * |x|^beta
};

Axis build_axis(const Integrand& g, std::size_t j, std::size_t panels, std::size_t rule_size) {
  const double r = g.radius[j];
  const double a = g.modes[j] == AxisMode::kFull ? -r : 0.0;
  std::vector<double> x, w;
  composite_gauss_legendre(a, r, panels, rule_size, x, w);
  Axis axis;
  double wmax = 0;
  std::vector<double> eff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] / r;
    double v = std::abs(t) < 1 ? std::exp(1 - 1 / (1 - t * t)) : 0.0;
    if (g.beta[j] > 0) v *= std::pow(std::abs(x[i]), static_cast<double>(g.beta[j]));
    eff[i] = w[i] * v;
    wmax = std::max(wmax, eff[i]);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (eff[i] >= 1e-20 * wmax && eff[i] > 0) {
      axis.x.push_back(x[i]);
      axis.w.push_back(eff[i]);
    }
  }
  return axis;
}

class LevelEvaluator {
 public:
  LevelEvaluator(const Integrand& g, std::vector<Axis> axes) : g_(g), axes_(std::move(axes)) {
    partial_.assign(g.n, std::vector<double>(g.terms.size()));
    coeffs_.assign(static_cast<std::size_t>(g.inner_degree) + 1, 0.0);
  }

  std::complex<double> run() {
    std::vector<double> start(g_.terms.size());
    for (std::size_t t = 0; t < g_.terms.size(); ++t) start[t] = g_.terms[t].coefficient;
    return g_.scale * recurse(0, start);
  }

 private:
  std::complex<double> recurse(std::size_t depth, const std::vector<double>& partial) {
    const Axis& axis = axes_[depth];
    if (depth + 1 == g_.n) return inner(axis, partial);
    std::complex<double> acc = 0;
    auto& next = partial_[depth];
    for (std::size_t i = 0; i < axis.x.size(); ++i) {
      for (std::size_t t = 0; t < g_.terms.size(); ++t) {
        next[t] = partial[t] * ipow(axis.x[i], g_.terms[t].exponent[depth]);
      }
      acc += axis.w[i] * recurse(depth + 1, next);
    }
    return acc;
  }

  std::complex<double> inner(const Axis& axis, const std::vector<double>& partial) {
    const std::size_t last = g_.n - 1;
    std::fill(coeffs_.begin(), coeffs_.end(), 0.0);
    for (std::size_t t = 0; t < g_.terms.size(); ++t) {
      coeffs_[static_cast<std::size_t>(g_.terms[t].exponent[last])] += partial[t];
    }
    const std::size_t deg = coeffs_.size() - 1;
    const double* c = coeffs_.data();
    const double* x = axis.x.data();
    const double* w = axis.w.data();
    const std::size_t m = axis.x.size();
    double re = 0, im = 0;
    if (g_.real_part_only) {
      for (std::size_t i = 0; i < m; ++i) {
        double ph = c[deg];
        for (std::size_t k = deg; k-- > 0;) ph = ph * x[i] + c[k];
        re += w[i] * std::cos(ph);
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        double ph = c[deg];
        for (std::size_t k = deg; k-- > 0;) ph = ph * x[i] + c[k];
        re += w[i] * std::cos(ph);
        im += w[i] * std::sin(ph);
      }
    }
    return {re, im};
  }

  static double ipow(double x, std::int64_t e) {
    double r = 1;
    for (std::int64_t k = 0; k < e; ++k) r *= x;
    return r;
  }

  const Integrand& g_;
  std::vector<Axis> axes_;
  std::vector<std::vector<double>> partial_;
  std::vector<double> coeffs_;
};

std::complex<double> evaluate_level(const Integrand& g, const std::vector<std::size_t>& panels, std::size_t rule_size) {
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < g.n; ++j) axes.push_back(build_axis(g, j, panels[j], rule_size));
  return LevelEvaluator(g, std::move(axes)).run();
}

void check_inputs(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump) {
  if (beta.size() != phase.dimension() || bump.radius.size() != phase.dimension()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "phase, beta and bump must share the dimension");
  }
  for (double r : bump.radius) {
    if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorKind::kInput, "bad_radius", "bump radius must be positive");
  }
  for (auto b : beta) {
    if (b < 0) throw Error(ErrorKind::kInput, "negative_beta", "beta entries must be nonnegative");
  }
}

}  // namespace

double weighted_mass(std::span<const std::int64_t> beta, const BumpSpec& bump) {
  double mass = 1;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    std::vector<double> x, w;
    composite_gauss_legendre(0, bump.radius[j], 16, 64, x, w);
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = x[i] / bump.radius[j];
      s += w[i] * std::exp(1 - 1 / (1 - t * t)) * std::pow(x[i], static_cast<double>(beta[j]));
    }
    mass *= 2 * s;
  }
  return mass;
}

IntegralResult integrate_oscillatory(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                                     double lambda, const QuadratureOptions& options) {
  check_inputs(phase, beta, bump);
  if (!(lambda >= 0) || !std::isfinite(lambda)) throw Error(ErrorKind::kInput, "bad_lambda", "lambda must be >= 0");
  if (!(options.quad_tol > 0)) throw Error(ErrorKind::kInput, "bad_tolerance", "quad_tol must be positive");
  const std::size_t n = phase.dimension();
  const std::size_t cap = options.max_nodes ? options.max_nodes : default_max_nodes(n);
  const std::size_t rule = options.initial_nodes;
  const double mass = weighted_mass(beta, bump);
  const double floor = 1e-13 * mass;

  const Integrand g = prepare(phase, beta, bump, lambda);
  std::vector<std::size_t> panels(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    // |x|^beta with odd beta has a kink at 0; keep it on a panel boundary
    if (g.modes[j] == AxisMode::kFull && beta[j] % 2 == 1) panels[j] = 2;
  }
  auto nodes_per_axis = [&] { return *std::max_element(panels.begin(), panels.end()) * rule; };

  IntegralResult result;
  std::complex<double> prev = evaluate_level(g, panels, rule);
  result.value = prev;
  result.nodes_per_axis = nodes_per_axis();
  result.last_delta = std::numeric_limits<double>::infinity();
  while (true) {
    for (auto& p : panels) p *= 2;
    if (nodes_per_axis() > cap) break;
    const std::complex<double> cur = evaluate_level(g, panels, rule);
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag())) {
      throw Error(ErrorKind::kNumeric, "non_finite", "quadrature produced a non-finite value");
    }
    result.last_delta = std::abs(cur - prev);
    result.value = cur;
    result.nodes_per_axis = nodes_per_axis();
    if (result.last_delta <= options.quad_tol * std::abs(cur) || result.last_delta <= floor) {
      result.converged = true;
      break;
    }
    prev = cur;
  }
  result.below_noise_floor = std::abs(result.value) < 1e-12 * mass;
  return result;
}

std::complex<double> oscillatory_integral(const Polynomial& phase, std::span<const std::int64_t> beta,
                                          const BumpSpec& bump, double lambda, const QuadratureOptions& options) {
  const auto r = integrate_oscillatory(phase, beta, bump, lambda, options);
  if (!r.converged) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "quadrature did not converge at lambda = %g with %zu nodes per axis (last delta %.3g)",
                  lambda, r.nodes_per_axis, r.last_delta);
    throw ConvergenceError(buf, r.last_delta);
  }
  return r.value;
}

std::vector<double> geometric_grid(double lmin, double lmax, std::size_t points) {
  if (!(lmin > 0) || !(lmax >= lmin) || points < 2) {
    throw Error(ErrorKind::kInput, "bad_grid", "need 0 < lmin <= lmax and at least two points");
  }
  std::vector<double> out(points);
  const double step = std::log(lmax / lmin) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = lmin * std::exp(step * static_cast<double>(i));
  out.back() = lmax;
  return out;
}

SweepResult sweep(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                  const SweepOptions& options) {
  check_inputs(phase, beta, bump);
  const auto grid = geometric_grid(options.lambda_min, options.lambda_max, options.points);
  SweepResult result;
  result.points.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) result.points[i].lambda = grid[i];

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
  // Largest lambda first: those dominate the cost.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= grid.size()) return;
      const std::size_t i = grid.size() - 1 - k;
      try {
        result.points[i].integral = integrate_oscillatory(phase, beta, bump, grid[i], options.quadrature);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& p : result.points) {
    char buf[160];
    if (!p.integral.converged) {
      std::snprintf(buf, sizeof buf, "lambda = %g not converged (nodes %zu, last delta %.3g); excluded from the fit",
                    p.lambda, p.integral.nodes_per_axis, p.integral.last_delta);
      result.warnings.emplace_back(buf);
    } else if (p.integral.below_noise_floor) {
      std::snprintf(buf, sizeof buf, "lambda = %g below the quadrature noise floor; excluded from the fit", p.lambda);
      result.warnings.emplace_back(buf);
    }
  }
  return result;
}

namespace {

struct Line {
  double intercept = 0, slope = 0, rms = 0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  Line line;
  line.slope = sxy / sxx;
  line.intercept = my - line.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - line.intercept - line.slope * x[i];
    ss += r * r;
  }
  line.rms = std::sqrt(ss / n);
  return line;
}

}  // namespace

FitResult fit_decay(const std::vector<SweepPoint>& points, double fit_from, const DecayPrediction& predicted,
                    std::vector<std::string>& warnings) {
  std::vector<double> logl, loglogl, logi;
  for (const auto& p : points) {
    if (p.lambda < fit_from || !p.integral.converged || p.integral.below_noise_floor) continue;
    logl.push_back(std::log(p.lambda));
    loglogl.push_back(std::log(std::log(p.lambda)));
    logi.push_back(std::log(std::abs(p.integral.value)));
  }
  if (logl.size() < 3) {
    throw Error(ErrorKind::kNumeric, "insufficient_points", "fewer than three usable sweep points for the fit");
  }
  if (logl.size() < points.size() / 2) warnings.emplace_back("fit uses fewer than half of the grid points");

  FitResult fit;
  fit.points_used = logl.size();
  fit.frozen_log_power = predicted.log_power;
  fit.frozen_exponent = to_double(predicted.exponent);

  std::vector<double> y(logl.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = logi[i] - fit.frozen_log_power * loglogl[i];
  const Line a = least_squares(logl, y);
  fit.fitted_exponent = -a.slope;
  fit.residual_rms = a.rms;

  for (std::size_t i = 0; i < y.size(); ++i) y[i] = logi[i] + fit.frozen_exponent * logl[i];
  const Line b = least_squares(loglogl, y);
  fit.fitted_log_power = b.slope;
  fit.log_power_residual_rms = b.rms;

  // Joint fit via the 3x3 normal equations.
  double m[3][4] = {};
  for (std::size_t i = 0; i < logl.size(); ++i) {
    const double row[3] = {1.0, -logl[i], loglogl[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += row[r] * row[c];
      m[r][3] += row[r] * logi[i];
    }
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == c || m[c][c] == 0) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  fit.joint_exponent = m[1][3] / m[1][1];
  fit.joint_log_power = m[2][3] / m[2][2];
  return fit;
}

SweepResult sweep_and_fit(const Polynomial& phase, std::span<const std::int64_t> beta, const BumpSpec& bump,
                          const SweepOptions& options, const DecayPrediction& predicted) {
  if (options.lambda_min < 10) throw Error(ErrorKind::kInput, "bad_grid", "lambda_min must be at least 10");
  if (options.points < 8) throw Error(ErrorKind::kInput, "bad_grid", "a sweep needs at least 8 points");
  SweepResult result = sweep(phase, beta, bump, options);
  // drop the first decade: preasymptotic
  double fit_from = options.lambda_min * 10;
  if (fit_from >= options.lambda_max) fit_from = options.lambda_min;
  result.fit = fit_decay(result.points, fit_from * (1 - 1e-12), predicted, result.warnings);
  return result;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  auto ranks = [](std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

VdcStatistic vdc_statistic(const std::vector<SweepPoint>& points, std::span<const std::int64_t> alpha,
                           std::span<const std::int64_t> beta) {
  const auto pred = predict_monomial(alpha, beta);
  VdcStatistic s;
  s.d = 1 / pred.exponent;
  s.multiplicity = pred.log_power + 1;
  const double inv_d = to_double(pred.exponent);
  for (const auto& p : points) {
    if (!p.integral.converged || p.integral.below_noise_floor) continue;
    s.lambdas.push_back(p.lambda);
    s.values.push_back(std::abs(p.integral.value) * std::pow(p.lambda, inv_d) /
                       std::pow(std::log(p.lambda), static_cast<double>(pred.log_power)));
  }
  if (s.values.empty()) throw Error(ErrorKind::kNumeric, "insufficient_points", "no usable sweep points");
  const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
  s.sup = *hi;
  s.max_min_ratio = *hi / *lo;
  std::vector<double> logl;
  for (double l : s.lambdas) logl.push_back(std::log(l));
  s.spearman = spearman_correlation(logl, s.values);
  return s;
}

VdcStatistic vdc_bound_statistic(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta,
                                 const BumpSpec& bump, const SweepOptions& options) {
  const Polynomial phase = Polynomial::monomial(IntVector(alpha.begin(), alpha.end()));
  return vdc_statistic(sweep(phase, beta, bump, options).points, alpha, beta);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "lambda,re,im,abs,nodes_per_axis,converged\n";
  char buf[256];
  for (const auto& p : result.points) {
    const auto& v = p.integral.value;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%zu,%s\n", p.lambda, v.real(), v.imag(), std::abs(v),
                  p.integral.nodes_per_axis, p.integral.converged ? "true" : "false");
    out << buf;
  }
}

}  // namespace newton_osc
