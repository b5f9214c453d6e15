#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newton_osc/newton_polyhedron.hpp"

namespace newton_osc {

enum class Verdict { kNondegenerate, kDegenerate, kNondegenerateNumeric, kInconclusive };

const char* to_string(Verdict v);

struct NondegeneracyOptions {
  std::uint64_t seed = 0;
  int starts_per_orthant = 200;
  double zero_threshold = 1e-12;          // below: numeric zero of the gradient
  double inconclusive_threshold = 1e-6;   // [zero, this]: inconclusive
};

struct FaceVerdict {
  std::size_t face_id = 0;  // index into enumerate_compact_faces
  Face face;
  Polynomial gamma{1};
  Verdict verdict = Verdict::kNondegenerate;
  bool exact_method = true;  // Sturm path rather than multistart
  // Point in (R \ 0)^n where every partial of the gamma-part vanishes.
  std::vector<std::string> witness;
  std::vector<double> witness_values;
  bool witness_exact = false;
  // Smallest scale-free gradient residual found by the numeric path.
  double residual = 0;
};

struct NondegeneracyReport {
  std::vector<FaceVerdict> faces;
  bool nondegenerate = true;  // every face nondegenerate (exactly or numerically)
  bool any_degenerate = false;
  bool any_inconclusive = false;
  bool numeric = false;       // some verdict came from the numeric path
};

// Decides whether grad f_gamma vanishes somewhere off the coordinate
// hyperplanes. Faces whose gamma-part involves at most two variables are
// decided exactly; larger ones by seeded multistart minimization.
FaceVerdict check_face(const Polynomial& p, const NewtonPolyhedron& np, const Face& face,
                       const NondegeneracyOptions& options = {});

NondegeneracyReport check_all(const Polynomial& p, const NewtonPolyhedron& np,
                              const NondegeneracyOptions& options = {});
NondegeneracyReport check_all(const Polynomial& p, const NondegeneracyOptions& options = {});

// Throws DegeneratePhaseError for a degenerate report and Error(kHypothesis)
// for an inconclusive one.
void require_nondegenerate(const NondegeneracyReport& report);

// f_gamma(t^w_1 x_1, ..., t^w_n x_n) == t^l f_gamma(x) as polynomials in (x, t).
bool is_quasi_homogeneous(const Polynomial& p, std::span<const std::int64_t> weights, std::int64_t degree);

}  // namespace newton_osc
