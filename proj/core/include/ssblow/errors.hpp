#pragma once

#include <stdexcept>
#include <string>

namespace ssblow {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  /// Short machine-readable kind, used in CLI error JSON.
  virtual const char* kind() const noexcept { return "error"; }
};

/// Some τ-exponent in an equation is not of the form base0 + kγ, k ∈ ℕ.
class CommensurabilityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "commensurability"; }
};

/// eval_numeric met a profile derivative with no evaluator.
class MissingBinding : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "missing_binding"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// ∂_ZΨ on R = 0 exceeds tolerance; the boundary flux does not vanish.
class BoundaryViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "boundary_violation"; }
};

/// Linear solve failed or did not reach the requested tolerance.
class SolverError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "solver"; }
};

/// Time step exceeds the stability bound, or the state went non-finite.
class StabilityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "stability"; }
};

class FitRejected : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "fit_rejected"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

}  // namespace ssblow
