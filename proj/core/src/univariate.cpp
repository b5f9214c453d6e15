#include "newton_osc/univariate.hpp"

#include <algorithm>

#include "newton_osc/errors.hpp"

namespace newton_osc {

UPoly::UPoly(RationalVector coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::operator()(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UPoly derivative(const UPoly& p) {
  RationalVector out;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    out.push_back(p.coefficients()[i] * static_cast<long>(i));
  }
  return UPoly(std::move(out));
}

UPoly monic(const UPoly& p) {
  if (p.is_zero()) return p;
  RationalVector c = p.coefficients();
  const Rational lead = p.leading();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInternal, "division_by_zero", "polynomial division by zero");
  RationalVector rem = a.coefficients();
  if (a.degree() < b.degree()) return {UPoly(), a};
  RationalVector quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& d = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i < d.size(); ++i) rem[static_cast<std::size_t>(k) + i] -= q * d[i];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divide(p, gcd(p, derivative(p))).first);
}

UPoly strip_zero_roots(const UPoly& p) {
  const auto& c = p.coefficients();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  return UPoly(RationalVector(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(derivative(p));
  while (seq.back().degree() > 0) {
    UPoly r = divide(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    RationalVector neg = r.coefficients();
    for (auto& x : neg) x = -x;
    seq.emplace_back(std::move(neg));
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<UPoly>& sturm, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : sturm) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficients()[static_cast<std::size_t>(i)] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

int count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b) {
  return sign_changes(sturm, a) - sign_changes(sturm, b);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const UPoly sf = squarefree_part(p);
  const auto sturm = sturm_sequence(sf);
  const Rational bound = cauchy_bound(sf);

  // Depth-first bisection over (a, b]; stack entries are processed left first.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = count_roots(sturm, a, b);
    if (n == 0) continue;
    if (n == 1) {
      if (sf(b) == 0) {
        out.push_back({b, b});
      } else {
        out.push_back({a, b});
      }
      continue;
    }
    Rational mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.upper < y.upper; });
  return out;
}

RootInterval refine(const UPoly& sf, RootInterval iv, const Rational& width) {
  if (iv.lower == iv.upper) return iv;
  // the lower endpoint is excluded from (a, b] and may itself be a zero of a
  // neighbouring root, so compare against the sign at the upper end
  const int su = sgn(sf(iv.upper));
  if (su == 0) return {iv.upper, iv.upper};
  while (iv.upper - iv.lower >= width) {
    const Rational mid = (iv.lower + iv.upper) / 2;
    const int sm = sgn(sf(mid));
    if (sm == 0) return {mid, mid};
    if (sm == su) {
      iv.upper = mid;
    } else {
      iv.lower = mid;
    }
  }
  return iv;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent.
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

std::optional<Rational> rational_root_in(const UPoly& p, const RootInterval& interval) {
  if (interval.lower == interval.upper) {
    if (p(interval.lower) == 0) return interval.lower;
    return std::nullopt;
  }
  // Scale to an integer polynomial; a rational root q/r in lowest terms has
  // r dividing the leading coefficient L. Two distinct rationals with
  // denominators at most |L| are at least 1/L^2 apart, so once the interval
  // is narrower than that its simplest rational is the only candidate.
  const UPoly sf = squarefree_part(p);
  Integer lcm_den = 1;
  for (const auto& c : sf.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer lead = abs(Integer(sf.leading() * lcm_den));
  Integer content = 0;
  for (const auto& c : sf.coefficients()) {
    const Integer scaled(c * lcm_den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  lead /= content;
  // strictly below 1/L^2, and the right endpoint is part of the interval
  const Rational width = Rational(1) / Rational(2 * lead * lead);
  RootInterval narrow = refine(sf, interval, width);
  if (narrow.lower == narrow.upper || sf(narrow.upper) == 0) return narrow.upper;
  Rational candidate = simplest_between(narrow.lower, narrow.upper);
  if (candidate != narrow.lower && sf(candidate) == 0) return candidate;
  return std::nullopt;
}

}  // namespace newton_osc
