#pragma once

#include <stdexcept>
#include <string>

namespace aspectra {

enum class Errc {
  NonUniformEdge,
  DuplicateEdge,
  VertexOutOfRange,
  Disconnected,
  NotASupertree,
  NotATree,
  InvalidParameter,
  PivotInEdge,
  MissingVertex,
  EdgeCollision,
  SizeMismatch,
  NotKSet,
  NotApplicable,
  NonPositiveInput,
  NotNormalized,
  AlphaOutOfRange,
  MaxIterationsExceeded,
  BudgetExceeded,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Thrown when power iteration hits the iteration cap; carries the best
/// certified bounds reached so far.
class IterationError : public Error {
public:
  IterationError(double low, double high, long iterations, const std::string& what)
      : Error(Errc::MaxIterationsExceeded, what), low_(low), high_(high), iterations_(iterations) {}

  double low() const noexcept { return low_; }
  double high() const noexcept { return high_; }
  long iterations() const noexcept { return iterations_; }

private:
  double low_;
  double high_;
  long iterations_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace aspectra
