#pragma once

#include <string>
#include <vector>

#include "ssblow/rational.hpp"
#include "ssblow/rigidity/triviality.hpp"

namespace ssblow::rigidity {

struct PipelineStep {
  std::string name;
  bool holds = false;
  std::string detail;
  /// The reduced equation the step acts on, as LaTeX (empty if none).
  std::string equation;
};

struct PipelineReport {
  Rational gamma;
  std::vector<PipelineStep> steps;
  TrivialityVerdict swirl;
  TrivialityVerdict vorticity;
  double psi_a = 0.0;
  double psi_b = 0.0;
  /// Every step holds: U = Ω = 0 and Ψ affine in Z.
  bool trivial = false;
};

/// Single-profile chain: ∂_RΨ = 0 ⇒ Ψ(Z) ⇒ Ω(Z) ⇒ U² = f(Z) + g(R) ⇒
/// U(Z) ⇒ U = 0 ⇒ Ω = 0 ⇒ Ψ'' = 0. The reductions are carried out on the
/// machine-derived hierarchy; each one-dimensional transport equation is
/// then classified. Requires γ > 0.
PipelineReport single_profile_pipeline(const Rational& gamma);

}  // namespace ssblow::rigidity
