#include "newton_osc/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "newton_osc/errors.hpp"

namespace newton_osc {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return 2;
    case ErrorKind::kHypothesis: return 3;
    case ErrorKind::kNumeric: return 4;
    case ErrorKind::kFitTolerance: return 5;
    case ErrorKind::kInternal: return 70;
  }
  return 70;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "input";
    case ErrorKind::kHypothesis: return "hypothesis";
    case ErrorKind::kNumeric: return "numeric";
    case ErrorKind::kFitTolerance: return "fit_tolerance";
    case ErrorKind::kInternal: return "internal";
  }
  return "internal";
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

Integer parse_digits(std::string_view digits) {
  if (digits.empty()) throw Error(ErrorKind::kInput, "bad_number", "empty number");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::kInput, "bad_number",
                  "invalid digit in number '" + std::string(digits) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw Error(ErrorKind::kInput, "bad_number", "empty number");

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_digits(text.substr(0, slash));
    Integer den = parse_digits(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::kInput, "bad_number", "zero denominator in '" + original + "'");
    result = Rational(num, den);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      Integer e_value = parse_digits(exp_text);
      if (e_value > 4096) throw Error(ErrorKind::kInput, "bad_number", "exponent too large in '" + original + "'");
      exponent = e_value.get_si() * (exp_negative ? -1 : 1);
    }
    std::string digits;
    if (auto dot_pos = mantissa.find('.'); dot_pos != std::string_view::npos) {
      std::string_view frac = mantissa.substr(dot_pos + 1);
      digits = std::string(mantissa.substr(0, dot_pos)) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      digits = std::string(mantissa);
    }
    Integer num = parse_digits(digits);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    result = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorKind::kInternal, "integer_overflow", "integer " + value.get_str() + " exceeds 64 bits");
  }
  return value.get_si();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorKind::kInternal, "not_integral", "expected an integer, got " + to_string(value));
  }
  return to_int64(value.get_num());
}

double to_double(const Rational& value) { return value.get_d(); }

std::int64_t gcd(std::span<const std::int64_t> entries) {
  std::int64_t g = 0;
  for (auto e : entries) g = std::gcd(g, e);
  return g;
}

IntVector primitive(std::span<const std::int64_t> v) {
  for (auto e : v) {
    if (e < 0) throw Error(ErrorKind::kInput, "negative_entry", "primitive: entries must be nonnegative");
  }
  const std::int64_t g = gcd(v);
  if (g == 0) throw Error(ErrorKind::kInput, "zero_vector", "primitive: zero vector has no direction");
  IntVector out(v.begin(), v.end());
  for (auto& e : out) e /= g;
  return out;
}

RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto e : v) out.emplace_back(static_cast<long>(e));
  return out;
}

IntVector primitive_direction(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& e : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& e : v) {
    Integer s = e.get_num() * (lcm / e.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    scaled.push_back(s);
  }
  if (g == 0) throw Error(ErrorKind::kInternal, "zero_vector", "primitive_direction of zero vector");
  IntVector out;
  for (auto& s : scaled) out.push_back(to_int64(Integer(s / g)));
  return out;
}

Rational dot(std::span<const std::int64_t> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace newton_osc
