#include "newton_osc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "newton_osc/errors.hpp"

namespace newton_osc {

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw Error(ErrorKind::kInput, "bad_dimension", "polynomial dimension must be at least 1");
}

Polynomial::Polynomial(std::size_t dimension, Terms terms) : Polynomial(dimension) {
  for (auto& [exponent, coefficient] : terms) add_term(exponent, coefficient);
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(ExponentVector(dimension, 0), value);
  return p;
}

Polynomial Polynomial::monomial(ExponentVector exponent, const Rational& coefficient) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t axis) {
  ExponentVector e(dimension, 0);
  e.at(axis) = 1;
  return monomial(std::move(e));
}

Rational Polynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(ExponentVector(dimension_, 0)); }

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::int64_t Polynomial::degree_in(std::size_t axis) const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(axis));
  return d;
}

void Polynomial::add_term(const ExponentVector& exponent, const Rational& coefficient) {
  if (exponent.size() != dimension_) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "exponent length does not match polynomial dimension");
  }
  for (auto e : exponent) {
    if (e < 0) throw Error(ErrorKind::kInput, "negative_exponent", "exponents must be nonnegative");
  }
  // callers may hand in mpq values built from a raw numerator/denominator
  Rational c = coefficient;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_dimension(const Polynomial& other) const {
  if (other.dimension_ != dimension_) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "polynomials live in different dimensions");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  Rational s = scalar;
  s.canonicalize();
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_dimension(b);
  Polynomial out(a.dimension_);
  ExponentVector e(a.dimension_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(dimension_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dimension, char variable)
      : text_(text), dimension_(dimension), variable_(variable) {}

  Polynomial parse() {
    Polynomial result(dimension_);
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-' between terms");
      }
      result += parse_term() * sign;
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_unsigned(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(start, std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial parse_term() {
    Rational coefficient = 1;
    ExponentVector exponent(dimension_, 0);
    parse_factor(coefficient, exponent);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      parse_factor(coefficient, exponent);
      skip_space();
    }
    return Polynomial::monomial(std::move(exponent), coefficient);
  }

  void parse_factor(Rational& coefficient, ExponentVector& exponent) {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_unsigned("number");
      Integer den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        den = parse_unsigned("denominator");
        if (den == 0) throw ParseError(den_pos, "zero denominator");
      }
      coefficient *= Rational(num, den);
      coefficient.canonicalize();
      return;
    }
    if (c == variable_) {
      const std::size_t var_pos = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(pos_, std::string("expected variable index after '") + variable_ + "'");
      }
      Integer index = parse_unsigned("variable index");
      if (index < 1 || index > dimension_) {
        throw Error(ErrorKind::kInput, "variable_out_of_range",
                    std::string(1, variable_) + index.get_str() + " at position " + std::to_string(var_pos) +
                        " exceeds dimension " + std::to_string(dimension_));
      }
      Integer power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (!at_end() && peek() == '-') {
          throw Error(ErrorKind::kInput, "negative_exponent",
                      "negative exponent at position " + std::to_string(pos_));
        }
        const std::size_t power_pos = pos_;
        power = parse_unsigned("exponent");
        if (power == 0) throw ParseError(power_pos, "exponent must be a positive integer");
        if (power > 1'000'000) throw ParseError(power_pos, "exponent too large");
      }
      exponent[index.get_ui() - 1] += power.get_si();
      return;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t dimension_;
  char variable_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t dimension, char variable) {
  if (dimension == 0) throw Error(ErrorKind::kInput, "bad_dimension", "dimension must be at least 1");
  return Parser(text, dimension, variable).parse();
}

std::string to_string(const Polynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variable + std::to_string(j + 1);
      if (e[j] > 1) monomial += "^" + std::to_string(e[j]);
    }
    if (monomial.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

namespace {

template <typename Scalar>
Scalar evaluate_impl(const Polynomial& p, std::span<const Scalar> point, auto&& convert) {
  if (point.size() != p.dimension()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "evaluation point has wrong dimension");
  }
  Scalar sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Scalar term = convert(c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (std::int64_t k = 0; k < e[j]; ++k) term *= point[j];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  return evaluate_impl<Rational>(p, point, [](const Rational& c) { return c; });
}

double evaluate(const Polynomial& p, std::span<const double> point) {
  return evaluate_impl<double>(p, point, [](const Rational& c) { return c.get_d(); });
}

Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension()) {
    throw Error(ErrorKind::kInput, "axis_out_of_range",
                "axis " + std::to_string(axis) + " out of range for dimension " + std::to_string(p.dimension()));
  }
  Polynomial::Terms out;
  for (const auto& [e, c] : p.terms()) {
    if (e[axis] == 0) continue;
    ExponentVector d = e;
    d[axis] -= 1;
    out.emplace(std::move(d), c * static_cast<long>(e[axis]));
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> substitution) {
  if (substitution.size() != p.dimension()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "compose: need one substitution per variable");
  }
  if (substitution.empty()) throw Error(ErrorKind::kInput, "dimension_mismatch", "compose: empty substitution");
  const std::size_t m = substitution.front().dimension();
  // powers[j][k] = substitution[j]^k, grown on demand.
  std::vector<std::vector<Polynomial>> powers(p.dimension());
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    if (substitution[j].dimension() != m) {
      throw Error(ErrorKind::kInput, "dimension_mismatch", "compose: substitutions differ in dimension");
    }
    powers[j].push_back(Polynomial::constant(m, 1));
  }
  auto power = [&](std::size_t j, std::int64_t k) -> const Polynomial& {
    while (static_cast<std::int64_t>(powers[j].size()) <= k) {
      powers[j].push_back(powers[j].back() * substitution[j]);
    }
    return powers[j][static_cast<std::size_t>(k)];
  };
  Polynomial result(m);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) term = term * power(j, e[j]);
    }
    result += term;
  }
  return result;
}

Polynomial monomial_substitution(const Polynomial& p, const std::vector<IntVector>& matrix) {
  if (matrix.size() != p.dimension()) {
    throw Error(ErrorKind::kInput, "dimension_mismatch", "monomial_substitution: need one row per variable");
  }
  const std::size_t m = matrix.empty() ? 0 : matrix.front().size();
  Polynomial::Terms out;
  for (const auto& [beta, c] : p.terms()) {
    ExponentVector gamma(m, 0);
    for (std::size_t j = 0; j < beta.size(); ++j) {
      for (std::size_t i = 0; i < m; ++i) gamma[i] += beta[j] * matrix[j][i];
    }
    auto [it, inserted] = out.try_emplace(std::move(gamma), c);
    if (!inserted) it->second += c;
  }
  return Polynomial(m, std::move(out));
}

}  // namespace newton_osc
