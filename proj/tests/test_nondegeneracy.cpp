#include <doctest.h>

#include <cmath>

#include "newton_osc/errors.hpp"
#include "newton_osc/nondegeneracy.hpp"
#include "oracles.hpp"

using namespace newton_osc;

namespace {

NondegeneracyReport report_of(const char* text, std::size_t n, std::uint64_t seed = 0) {
  NondegeneracyOptions opt;
  opt.seed = seed;
  return check_all(parse_polynomial(text, n), opt);
}

const FaceVerdict* first_degenerate(const NondegeneracyReport& r) {
  for (const auto& f : r.faces) {
    if (f.verdict == Verdict::kDegenerate) return &f;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("exact verdicts on the examples") {
  auto r = report_of("x1^2+x2^2", 2);
  CHECK(r.nondegenerate);
  CHECK(!r.numeric);
  for (const auto& f : r.faces) CHECK(f.verdict == Verdict::kNondegenerate);

  r = report_of("x1^2*x2", 2);
  CHECK(r.nondegenerate);
  CHECK(r.faces.size() == 1);

  r = report_of("x1^2*x2^2", 2);
  CHECK(r.nondegenerate);
  CHECK(r.faces.size() == 1);

  r = report_of("x1^2+2*x1*x2+x2^2", 2);
  CHECK(!r.nondegenerate);
  CHECK(r.any_degenerate);
  const auto* bad = first_degenerate(r);
  REQUIRE(bad);
  CHECK(bad->face.dimension == 1);
  CHECK(bad->exact_method);
  CHECK(bad->witness_exact);
  CHECK(bad->witness == std::vector<std::string>{"1", "-1"});
}

TEST_CASE("witnesses are exact zeros of the gradient") {
  for (const char* text : {"x1^2+2*x1*x2+x2^2", "x1^2-2*x1*x2+x2^2", "x1^4 - 2*x1^2*x2^3 + x2^6",
                           "x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3"}) {
    CAPTURE(text);
    const auto r = check_all(parse_polynomial(text, 2));
    int exact_witnesses = 0;
    for (const auto& f : r.faces) {
      if (f.verdict != Verdict::kDegenerate || !f.witness_exact) continue;
      RationalVector w;
      for (const auto& s : f.witness) w.push_back(parse_rational(s));
      for (const auto& x : w) CHECK(x != 0);
      for (std::size_t j = 0; j < 2; ++j) CHECK(evaluate(partial_derivative(f.gamma, j), w) == 0);
      ++exact_witnesses;
    }
    CHECK(exact_witnesses > 0);
  }
  // (x1^2 - x2^3)^2 vanishes to second order along x1^2 = x2^3
  const auto r = report_of("x1^4 - 2*x1^2*x2^3 + x2^6", 2);
  CHECK(r.any_degenerate);
}

TEST_CASE("irrational witnesses are flagged as approximate") {
  // (x1^2 - 2 x2^2)^2: critical along x1 = +-sqrt(2) x2
  const auto r = report_of("x1^4 - 4*x1^2*x2^2 + 4*x2^4", 2);
  const auto* bad = first_degenerate(r);
  REQUIRE(bad);
  CHECK(!bad->witness_exact);
  REQUIRE(bad->witness_values.size() == 2);
  const double ratio = std::abs(bad->witness_values[0] / bad->witness_values[1]);
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("every sign orthant is examined") {
  // Zero set only in the orthant x1 > 0, x2 < 0 and its mirror.
  for (const char* text : {"x1^2+2*x1*x2+x2^2", "x1^2-2*x1*x2+x2^2", "x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3"}) {
    CAPTURE(text);
    CHECK(report_of(text, 2).any_degenerate);
  }
}

TEST_CASE("faces are quasi-homogeneous with respect to their normals") {
  for (const auto& ph : oracle::catalogue()) {
    const auto p = parse_polynomial(ph.text, ph.dimension);
    const auto np = newton_polyhedron(p);
    for (const auto& face : enumerate_compact_faces(np)) {
      const auto g = gamma_part(p, np, face);
      for (auto fi : face.tight_facets) {
        CHECK(is_quasi_homogeneous(g, np.facets()[fi].normal, np.facets()[fi].offset));
      }
    }
  }
  const auto p = parse_polynomial("x1^2 + x2^3", 2);
  CHECK(!is_quasi_homogeneous(p, IntVector{1, 1}, 2));
  CHECK(is_quasi_homogeneous(p, IntVector{3, 2}, 6));
}

TEST_CASE("catalogue phases pass the gate") {
  for (const auto& ph : oracle::catalogue()) {
    CAPTURE(ph.text);
    const auto r = report_of(ph.text.c_str(), ph.dimension);
    CHECK(r.nondegenerate);
    CHECK(!r.any_inconclusive);
    CHECK_NOTHROW(require_nondegenerate(r));
  }
}

TEST_CASE("three-variable faces use the numeric path") {
  const auto r = report_of("x1^3+x2^4+x3^5", 3);
  CHECK(r.nondegenerate);
  CHECK(r.numeric);
  bool saw = false;
  for (const auto& f : r.faces) {
    if (!f.exact_method) {
      saw = true;
      CHECK(f.verdict == Verdict::kNondegenerateNumeric);
      CHECK(f.residual > 1e-6);
    }
  }
  CHECK(saw);

  const auto bad = report_of("x1^2+x2^2+x3^2+2*x1*x2+2*x1*x3+2*x2*x3", 3);
  CHECK(bad.any_degenerate);
  bool saw_numeric = false;
  for (const auto& f : bad.faces) {
    if (f.verdict != Verdict::kDegenerate) continue;
    REQUIRE(f.witness_values.size() == 3);
    for (double x : f.witness_values) CHECK(x != 0);
    // the gradient of the face polynomial vanishes at the witness
    double scale = 0;
    for (double x : f.witness_values) scale = std::max(scale, std::abs(x));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(std::abs(evaluate(partial_derivative(f.gamma, j), f.witness_values)) < 1e-9 * scale);
    }
    if (!f.exact_method) {
      saw_numeric = true;
      // the full face (x1 + x2 + x3)^2 is critical on x1 + x2 + x3 = 0
      const auto& w = f.witness_values;
      CHECK(std::abs(w[0] + w[1] + w[2]) < 1e-9 * scale);
    }
  }
  CHECK(saw_numeric);
}

TEST_CASE("verdicts are deterministic for a fixed seed") {
  for (const char* text : {"x1^3+x2^4+x3^5", "x1^2*x2+x2^3+x3^4+x1*x3^3"}) {
    const auto a = report_of(text, 3, 7), b = report_of(text, 3, 7);
    REQUIRE(a.faces.size() == b.faces.size());
    for (std::size_t i = 0; i < a.faces.size(); ++i) {
      CHECK(a.faces[i].verdict == b.faces[i].verdict);
      CHECK(a.faces[i].residual == b.faces[i].residual);
      CHECK(a.faces[i].witness == b.faces[i].witness);
    }
  }
}

TEST_CASE("require_nondegenerate raises with the witness") {
  const auto r = report_of("x1^2+2*x1*x2+x2^2", 2);
  try {
    require_nondegenerate(r);
    FAIL("degenerate phase accepted");
  } catch (const DegeneratePhaseError& e) {
    CHECK(e.kind() == ErrorKind::kHypothesis);
    CHECK(e.witness() == std::vector<std::string>{"1", "-1"});
    CHECK(e.witness_exact());
  }
}

TEST_CASE("two-variable faces in three dimensions stay on the exact path") {
  const auto r = report_of("x1^2+2*x1*x2+x2^2+x3^2", 3);
  CHECK(r.any_degenerate);
  // the edge (x1 + x2)^2 involves two of the three variables
  const FaceVerdict* f = nullptr;
  for (const auto& face : r.faces) {
    if (face.verdict == Verdict::kDegenerate && face.face.dimension == 1) f = &face;
  }
  REQUIRE(f);
  CHECK(f->exact_method);
  CHECK(f->witness_exact);
}
