#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace newton_osc {

// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  kInput,        // malformed text, bad flags, dimension mismatches
  kHypothesis,   // phase violates f(0)=0, grad f(0)=0 or nondegeneracy
  kNumeric,      // quadrature failed to converge, NaN/overflow
  kFitTolerance, // fitted exponent outside the requested tolerance
  kInternal,     // an exact identity that must hold did not
};

int exit_code(ErrorKind kind);
const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string tag, const std::string& message)
      : std::runtime_error(message), kind_(kind), tag_(std::move(tag)) {}

  ErrorKind kind() const { return kind_; }
  // Short machine-readable identifier, e.g. "nonzero_constant_term".
  const std::string& tag() const { return tag_; }

 private:
  ErrorKind kind_;
  std::string tag_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::kInput, "syntax_error",
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when some compact face has a vanishing gradient off the axes.
class DegeneratePhaseError : public Error {
 public:
  DegeneratePhaseError(const std::string& message, std::vector<std::string> witness,
                       bool witness_exact)
      : Error(ErrorKind::kHypothesis, "degenerate_phase", message),
        witness_(std::move(witness)),
        witness_exact_(witness_exact) {}

  const std::vector<std::string>& witness() const { return witness_; }
  bool witness_exact() const { return witness_exact_; }

 private:
  std::vector<std::string> witness_;
  bool witness_exact_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double last_delta)
      : Error(ErrorKind::kNumeric, "quadrature_not_converged", message),
        last_delta_(last_delta) {}

  double last_delta() const { return last_delta_; }

 private:
  double last_delta_;
};

}  // namespace newton_osc
