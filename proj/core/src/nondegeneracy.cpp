#include "newton_osc/nondegeneracy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "newton_osc/errors.hpp"
#include "newton_osc/univariate.hpp"

namespace newton_osc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kNondegenerate: return "nondegenerate";
    case Verdict::kDegenerate: return "degenerate";
    case Verdict::kNondegenerateNumeric: return "nondegenerate_numeric";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

bool is_quasi_homogeneous(const Polynomial& p, std::span<const std::int64_t> weights, std::int64_t degree) {
  const std::size_t n = p.dimension();
  std::vector<Polynomial> subst;
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector e(n + 1, 0);
    e[j] = 1;
    e[n] = weights[j];
    subst.push_back(Polynomial::monomial(std::move(e)));
  }
  const Polynomial lhs = compose(p, subst);
  Polynomial::Terms terms;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector lifted = e;
    lifted.push_back(degree);
    terms.emplace(std::move(lifted), c);
  }
  return lhs == Polynomial(n + 1, std::move(terms));
}

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::size_t> present_variables(const Polynomial& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.dimension(); ++j) {
    if (g.degree_in(j) > 0) out.push_back(j);
  }
  return out;
}

// g restricted to x_fixed = value, as a polynomial in x_free.
UPoly slice(const Polynomial& g, std::size_t fixed, const Rational& value, std::size_t free) {
  RationalVector c;
  for (const auto& [e, coef] : g.terms()) {
    const auto k = static_cast<std::size_t>(e[free]);
    if (c.size() <= k) c.resize(k + 1);
    Rational term = coef;
    for (std::int64_t i = 0; i < e[fixed]; ++i) term *= value;
    c[k] += term;
  }
  return UPoly(std::move(c));
}

void set_witness(FaceVerdict& out, const RationalVector& point) {
  out.witness.clear();
  out.witness_values.clear();
  for (const auto& x : point) {
    out.witness.push_back(to_string(x));
    out.witness_values.push_back(to_double(x));
  }
  out.witness_exact = true;
}

bool gradient_vanishes(const std::vector<Polynomial>& grad, const RationalVector& x) {
  return std::all_of(grad.begin(), grad.end(), [&](const Polynomial& d) { return evaluate(d, x) == 0; });
}

// At most two variables present: decided exactly on the slices x_a = +-1 and
// x_b = +-1, which meet every orbit of the quasi-homogeneous scaling.
void exact_check(const Polynomial& g, const std::vector<std::size_t>& vars, FaceVerdict& out) {
  const std::size_t n = g.dimension();
  out.exact_method = true;
  out.verdict = Verdict::kNondegenerate;
  if (vars.size() == 1 && g.size() == 1) return;

  std::vector<Polynomial> grad;
  for (std::size_t j = 0; j < n; ++j) grad.push_back(partial_derivative(g, j));

  if (vars.size() == 1) {
    const std::size_t a = vars[0];
    const UPoly d = slice(grad[a], a, 1, a);
    for (const auto& iv : isolate_real_roots(strip_zero_roots(d))) {
      RationalVector x(n, 1);
      if (auto r = rational_root_in(d, iv)) {
        x[a] = *r;
        out.verdict = Verdict::kDegenerate;
        set_witness(out, x);
        return;
      }
      const UPoly sf = squarefree_part(strip_zero_roots(d));
      const auto narrow = refine(sf, iv, Rational(1, 1000000000) * Rational(1, 1000000000));
      x[a] = (narrow.lower + narrow.upper) / 2;
      out.verdict = Verdict::kDegenerate;
      set_witness(out, x);
      out.witness_exact = false;
      return;
    }
    return;
  }

  const std::array<std::size_t, 2> ab{vars[0], vars[1]};
  for (int which = 0; which < 2; ++which) {
    const std::size_t fixed = ab[static_cast<std::size_t>(which)];
    const std::size_t free = ab[static_cast<std::size_t>(1 - which)];
    for (int sign : {1, -1}) {
      const Rational value(sign);
      const UPoly da = slice(grad[ab[0]], fixed, value, free);
      const UPoly db = slice(grad[ab[1]], fixed, value, free);
      UPoly common = gcd(da, db);
      RationalVector x(n, 1);
      x[fixed] = value;
      if (common.is_zero()) {
        // both partials vanish identically on this slice
        out.verdict = Verdict::kDegenerate;
        set_witness(out, x);
        return;
      }
      common = strip_zero_roots(common);
      const auto roots = isolate_real_roots(common);
      if (roots.empty()) continue;
      out.verdict = Verdict::kDegenerate;
      if (auto r = rational_root_in(common, roots.front())) {
        x[free] = *r;
        set_witness(out, x);
        if (!gradient_vanishes(grad, x)) {
          throw Error(ErrorKind::kInternal, "bad_witness", "exact witness does not annihilate the gradient");
        }
        return;
      }
      const UPoly sf = squarefree_part(common);
      const auto narrow = refine(sf, roots.front(), Rational(1, 1000000000) * Rational(1, 1000000000));
      x[free] = (narrow.lower + narrow.upper) / 2;
      set_witness(out, x);
      out.witness_exact = false;
      return;
    }
  }
}

// Scale-free residual: x_j d_j g at x = s * exp(u), relative to the size of
// the individual monomials. Zero exactly at critical points off the axes.
struct NumericSystem {
  std::vector<std::size_t> vars;
  std::vector<std::vector<double>> exponents;  // per term, restricted to vars
  std::vector<double> coefficients;           // normalized by the largest |c|
  std::vector<double> weights;                // quasi-homogeneous weights on vars

  std::size_t m() const { return vars.size(); }

  // Residual vector R and Jacobian dR/du; returns sum R_j^2.
  double evaluate(const std::vector<double>& u, const std::vector<int>& signs, std::vector<double>& r,
                  std::vector<std::vector<double>>& jac) const {
    const std::size_t t = coefficients.size();
    std::vector<double> phase(t);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < t; ++k) {
      double s = 0;
      for (std::size_t j = 0; j < m(); ++j) s += exponents[k][j] * u[j];
      phase[k] = s;
      top = std::max(top, s);
    }
    std::vector<double> mono(t);  // signed c_k x^alpha_k / e^top
    for (std::size_t k = 0; k < t; ++k) {
      double sgn = 1;
      for (std::size_t j = 0; j < m(); ++j) {
        if (signs[j] < 0 && static_cast<long>(exponents[k][j]) % 2 != 0) sgn = -sgn;
      }
      mono[k] = coefficients[k] * sgn * std::exp(phase[k] - top);
    }
    double d2 = 0;
    std::vector<double> dd2(m(), 0.0);
    for (std::size_t k = 0; k < t; ++k) {
      d2 += mono[k] * mono[k];
      for (std::size_t j = 0; j < m(); ++j) dd2[j] += 2 * exponents[k][j] * mono[k] * mono[k];
    }
    const double d = std::sqrt(d2);
    r.assign(m(), 0.0);
    jac.assign(m(), std::vector<double>(m(), 0.0));
    double total = 0;
    for (std::size_t i = 0; i < m(); ++i) {
      double num = 0;
      std::vector<double> dnum(m(), 0.0);
      for (std::size_t k = 0; k < t; ++k) {
        num += exponents[k][i] * mono[k];
        for (std::size_t j = 0; j < m(); ++j) dnum[j] += exponents[k][i] * exponents[k][j] * mono[k];
      }
      r[i] = num / d;
      for (std::size_t j = 0; j < m(); ++j) {
        // dD/du_j = dd2[j] / (2 D)
        jac[i][j] = dnum[j] / d - num * dd2[j] / (2 * d2 * d);
      }
      total += r[i] * r[i];
    }
    return total;
  }

  void project(std::vector<double>& u) const {
    double wu = 0, ww = 0;
    for (std::size_t j = 0; j < m(); ++j) {
      wu += weights[j] * u[j];
      ww += weights[j] * weights[j];
    }
    for (std::size_t j = 0; j < m(); ++j) u[j] = std::clamp(u[j] - wu / ww * weights[j], -6.0, 6.0);
  }
};

bool solve_small(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return true;
}

// Levenberg-Marquardt on the residual vector, staying on the normalization
// hyperplane <w, u> = 0.
double minimize(const NumericSystem& sys, std::vector<double>& u, const std::vector<int>& signs) {
  std::vector<double> r, trial_r;
  std::vector<std::vector<double>> jac, trial_jac;
  sys.project(u);
  double f = sys.evaluate(u, signs, r, jac);
  double mu = 1e-3;
  const std::size_t m = sys.m();
  for (int iter = 0; iter < 100 && f > 1e-30; ++iter) {
    std::vector<std::vector<double>> jtj(m, std::vector<double>(m, 0.0));
    std::vector<double> g(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        g[j] += jac[i][j] * r[i];
        for (std::size_t k = 0; k < m; ++k) jtj[j][k] += jac[i][j] * jac[i][k];
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      auto a = jtj;
      for (std::size_t j = 0; j < m; ++j) a[j][j] += mu * (1 + jtj[j][j]);
      std::vector<double> neg_g(m), step;
      for (std::size_t j = 0; j < m; ++j) neg_g[j] = -g[j];
      if (!solve_small(a, neg_g, step)) {
        mu *= 10;
        continue;
      }
      std::vector<double> trial = u;
      for (std::size_t j = 0; j < m; ++j) trial[j] += step[j];
      sys.project(trial);
      const double ft = sys.evaluate(trial, signs, trial_r, trial_jac);
      if (ft < f) {
        u = std::move(trial);
        f = ft;
        r = trial_r;
        jac = trial_jac;
        mu = std::max(mu / 10, 1e-12);
        improved = true;
        break;
      }
      mu *= 10;
    }
    if (!improved) break;
  }
  return f;
}

void numeric_check(const Polynomial& g, const std::vector<std::size_t>& vars, const NewtonPolyhedron& np,
                   const Face& face, const NondegeneracyOptions& options, FaceVerdict& out) {
  out.exact_method = false;
  NumericSystem sys;
  sys.vars = vars;
  double cmax = 0;
  for (const auto& [e, c] : g.terms()) cmax = std::max(cmax, std::abs(to_double(c)));
  for (const auto& [e, c] : g.terms()) {
    std::vector<double> ex;
    for (auto j : vars) ex.push_back(static_cast<double>(e[j]));
    sys.exponents.push_back(std::move(ex));
    sys.coefficients.push_back(to_double(c) / cmax);
  }
  for (auto j : vars) {
    double w = 0;
    for (auto f : face.tight_facets) w += static_cast<double>(np.facets()[f].normal[j]);
    sys.weights.push_back(w);
  }

  const std::size_t m = vars.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_u;
  std::vector<int> best_signs;
  for (std::uint64_t orthant = 0; orthant < (std::uint64_t{1} << m); ++orthant) {
    std::vector<int> signs(m);
    for (std::size_t j = 0; j < m; ++j) signs[j] = (orthant >> j) & 1 ? -1 : 1;
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(out.face_id), static_cast<std::uint32_t>(orthant)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> start(-3.0, 3.0);
    for (int s = 0; s < options.starts_per_orthant; ++s) {
      std::vector<double> u(m);
      for (auto& x : u) x = start(rng);
      const double f = minimize(sys, u, signs);
      if (f < best) {
        best = f;
        best_u = u;
        best_signs = signs;
      }
    }
  }
  out.residual = best;

  if (best >= options.inconclusive_threshold) {
    out.verdict = Verdict::kNondegenerateNumeric;
    return;
  }
  if (best >= options.zero_threshold) {
    out.verdict = Verdict::kInconclusive;
    return;
  }

  out.verdict = Verdict::kDegenerate;
  // Move along the scaling orbit so the first coordinate is +-1, then try an
  // exact rational point near the numeric one.
  const double shift = best_u[0] / sys.weights[0];
  std::vector<double> x(g.dimension(), 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    x[vars[j]] = best_signs[j] * std::exp(best_u[j] - shift * sys.weights[j]);
  }
  std::vector<Polynomial> grad;
  for (std::size_t j = 0; j < g.dimension(); ++j) grad.push_back(partial_derivative(g, j));
  RationalVector exact(g.dimension());
  for (std::size_t j = 0; j < g.dimension(); ++j) {
    const double tol = 1e-7 * std::abs(x[j]);
    exact[j] = simplest_between(Rational(x[j] - tol), Rational(x[j] + tol));
  }
  if (gradient_vanishes(grad, exact)) {
    set_witness(out, exact);
    return;
  }
  out.witness.clear();
  out.witness_values = x;
  for (double v : x) out.witness.push_back(format_double(v));
  out.witness_exact = false;
}

}  // namespace

FaceVerdict check_face(const Polynomial& p, const NewtonPolyhedron& np, const Face& face,
                       const NondegeneracyOptions& options) {
  FaceVerdict out;
  out.face = face;
  out.gamma = gamma_part(p, np, face);
  const Polynomial& g = out.gamma;
  if (g.is_zero()) throw Error(ErrorKind::kInternal, "zero_gamma_part", "compact face carries no terms");

  for (auto f : face.tight_facets) {
    const auto& facet = np.facets()[f];
    if (!is_quasi_homogeneous(g, facet.normal, facet.offset)) {
      throw Error(ErrorKind::kInternal, "not_quasi_homogeneous", "gamma-part fails the weighted scaling identity");
    }
  }

  const auto vars = present_variables(g);
  if (vars.empty()) throw Error(ErrorKind::kInternal, "constant_gamma_part", "gamma-part is constant");
  if (vars.size() <= 2) {
    exact_check(g, vars, out);
  } else {
    numeric_check(g, vars, np, face, options, out);
  }
  return out;
}

NondegeneracyReport check_all(const Polynomial& p, const NewtonPolyhedron& np, const NondegeneracyOptions& options) {
  NondegeneracyReport report;
  const auto faces = enumerate_compact_faces(np);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    NondegeneracyOptions face_options = options;
    face_options.seed = options.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    FaceVerdict v = check_face(p, np, faces[i], face_options);
    v.face_id = i;
    switch (v.verdict) {
      case Verdict::kDegenerate:
        report.any_degenerate = true;
        report.nondegenerate = false;
        break;
      case Verdict::kInconclusive:
        report.any_inconclusive = true;
        report.nondegenerate = false;
        break;
      default:
        break;
    }
    if (!v.exact_method) report.numeric = true;
    report.faces.push_back(std::move(v));
  }
  return report;
}

NondegeneracyReport check_all(const Polynomial& p, const NondegeneracyOptions& options) {
  check_phase_hypotheses(p);
  return check_all(p, newton_polyhedron(p), options);
}

void require_nondegenerate(const NondegeneracyReport& report) {
  for (const auto& f : report.faces) {
    if (f.verdict == Verdict::kDegenerate) {
      throw DegeneratePhaseError("gradient of the gamma-part " + to_string(f.gamma) +
                                     " vanishes off the coordinate hyperplanes",
                                 f.witness, f.witness_exact);
    }
  }
  for (const auto& f : report.faces) {
    if (f.verdict == Verdict::kInconclusive) {
      throw Error(ErrorKind::kHypothesis, "nondegeneracy_inconclusive",
                  "numeric nondegeneracy check was inconclusive for " + to_string(f.gamma));
    }
  }
}

}  // namespace newton_osc
