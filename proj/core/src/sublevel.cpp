#include "newton_osc/sublevel.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "newton_osc/errors.hpp"

namespace newton_osc {

namespace {

// sum over rates r of p_r(t) e^{-r t}, p_r with coefficients lowest first.
using ExpPoly = std::map<Rational, RationalVector>;

void add_to(RationalVector& p, std::size_t degree, const Rational& c) {
  if (p.size() <= degree) p.resize(degree + 1);
  p[degree] += c;
}

Rational factorial(std::size_t k) {
  Integer f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

// density * (s e^{-s t}), term by term.
ExpPoly convolve_exponential(const ExpPoly& density, const Rational& s) {
  ExpPoly out;
  for (const auto& [r, poly] : density) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Rational& a = poly[i];
      if (a == 0) continue;
      if (r == s) {
        // s e^{-st} int_0^t tau^i dtau
        add_to(out[s], i + 1, a * s / static_cast<long>(i + 1));
        continue;
      }
      // s e^{-st} int_0^t tau^i e^{-(r-s) tau} dtau with d = r - s:
      //   i!/d^{i+1} (1 - e^{-dt} sum_k (dt)^k / k!)
      const Rational d = r - s;
      Rational dpow = d;
      for (std::size_t k = 0; k < i; ++k) dpow *= d;
      const Rational c = a * s * factorial(i) / dpow;
      add_to(out[s], 0, c);
      Rational dk = 1;
      for (std::size_t k = 0; k <= i; ++k) {
        add_to(out[r], k, -c * dk / factorial(k));
        dk *= d;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SublevelTerm> sublevel_expression(std::span<const std::int64_t> alpha) {
  std::vector<Rational> rates;
  for (auto a : alpha) {
    if (a < 0) throw Error(ErrorKind::kInput, "negative_exponent", "alpha entries must be nonnegative");
    if (a > 0) rates.emplace_back(1, a);
  }
  if (rates.empty()) throw Error(ErrorKind::kInput, "zero_alpha", "alpha must have a positive entry");
  for (auto& r : rates) r.canonicalize();

  ExpPoly density;
  density[rates[0]] = {rates[0]};
  for (std::size_t k = 1; k < rates.size(); ++k) density = convolve_exponential(density, rates[k]);

  // int_L^inf t^i e^{-rt} dt = e^{-rL} sum_k i!/(k! r^{i-k+1}) L^k, and
  // e^{-rL} = u^r with L = log(1/u).
  std::map<std::pair<Rational, int>, Rational> collected;
  for (const auto& [r, poly] : density) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        Rational rp = r;
        for (std::size_t e = 0; e < i - k; ++e) rp *= r;
        collected[{r, static_cast<int>(k)}] += poly[i] * factorial(i) / (factorial(k) * rp);
      }
    }
  }
  std::vector<SublevelTerm> out;
  for (const auto& [key, c] : collected) {
    if (c != 0) out.push_back({c, key.first, key.second});
  }
  return out;
}

double evaluate_sublevel(const std::vector<SublevelTerm>& terms, double u) {
  const double logu = std::log(1 / u);
  long double sum = 0;
  for (const auto& t : terms) {
    sum += static_cast<long double>(to_double(t.coefficient)) * std::pow(static_cast<long double>(u), static_cast<long double>(to_double(t.power))) *
           std::pow(static_cast<long double>(logu), t.log_power);
  }
  return static_cast<double>(sum);
}

SublevelMeasure sublevel_measure(std::span<const std::int64_t> alpha, const Rational& u) {
  if (u <= 0) throw Error(ErrorKind::kInput, "bad_u", "u must be positive");
  SublevelMeasure m;
  m.terms = sublevel_expression(alpha);
  if (u >= 1) {
    m.saturated = true;
    m.value = 1;
    return m;
  }
  m.value = evaluate_sublevel(m.terms, to_double(u));
  return m;
}

std::string SublevelMeasure::expression() const {
  if (saturated) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coefficient;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(to_string(c));
    if (t.power == 1) {
      factors.emplace_back("u");
    } else if (t.power != 0) {
      factors.push_back("u^(" + to_string(t.power) + ")");
    }
    if (t.log_power == 1) {
      factors.emplace_back("log(1/u)");
    } else if (t.log_power > 1) {
      factors.push_back("log(1/u)^" + std::to_string(t.log_power));
    }
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

MonteCarloEstimate sublevel_monte_carlo(std::span<const std::int64_t> alpha, double u, std::uint64_t samples,
                                        std::uint64_t seed) {
  if (!(u > 0)) throw Error(ErrorKind::kInput, "bad_u", "u must be positive");
  if (samples == 0) throw Error(ErrorKind::kInput, "bad_samples", "need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double logu = std::log(u);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double acc = 0;
    for (auto a : alpha) {
      if (a == 0) continue;
      acc += static_cast<double>(a) * std::log(unit(rng));
    }
    if (acc < logu) ++hits;
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  est.stderr_ = std::sqrt(est.mean * (1 - est.mean) / static_cast<double>(samples));
  return est;
}

}  // namespace newton_osc
