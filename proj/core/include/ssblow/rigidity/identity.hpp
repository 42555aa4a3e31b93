#pragma once

#include <string>
#include <string_view>

#include "ssblow/field.hpp"
#include "ssblow/rigidity/half_plane.hpp"

namespace ssblow::rigidity {

// Testing the transport equation b·∇U = 0, b = γY + ∇⊥Ψ, against
// p·U^{p−1}σ_ρ and integrating by parts (div b = 2γ) gives
//   lhs = rhs + boundary − transport
// with
//   lhs       = 2γ ∫ U^p σ_ρ
//   rhs       = −∫ U^p ∇σ_ρ·b
//   boundary  = ∮ U^p σ_ρ b·ν
//   transport = ∫ σ_ρ b·∇(U^p)
// For a solution transport = 0, and boundary = 0 once ∂_ZΨ = 0 on R = 0.

struct IbpOptions {
  /// Throw BoundaryViolation when max |∂_ZΨ| on R = 0 exceeds bc_tolerance.
  bool enforce_boundary_condition = true;
  double bc_tolerance = 1e-8;
};

struct IbpReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double boundary_term = 0.0;
  double transport_term = 0.0;
  /// lhs − (rhs + boundary − transport); discretization error only.
  double balance = 0.0;
  double bc_residual = 0.0;
  double gamma = 0.0;
  int p = 2;
  double rho = 0.0;
  double h = 0.0;
};

/// Trapezoid quadrature on the field's half-plane grid; σ_ρ and ∇σ_ρ are
/// exact, ∇U^p and ∇Ψ use second-order differences. p must be a positive
/// even integer and ρ > 0 (DomainError otherwise).
IbpReport ibp_identity_check(const ScalarField2D& U, const ScalarField2D& Psi, double gamma, int p, double rho,
                             const IbpOptions& options = {});

/// The check on the grid and on its every-other-node coarsening, with an
/// O(h²) tolerance for the balance estimated from the two.
struct IbpVerdict {
  IbpReport fine;
  IbpReport coarse;
  double tolerance = 0.0;
  bool passes = false;
};
IbpVerdict ibp_identity_verdict(const ScalarField2D& U, const ScalarField2D& Psi, double gamma, int p, double rho,
                                const IbpOptions& options = {});

enum class IdentityPreset {
  Rays,     // exact solution: U² = A + B cos 2θ about the stagnation point of b
  Compact,  // smooth bump inside the ρ-ball; not a solution, transport ≠ 0
};
std::string_view preset_name(IdentityPreset p);
IdentityPreset parse_preset(std::string_view name);

struct IdentityInputs {
  ScalarField2D U;
  ScalarField2D Psi;
  double gamma = 2.0;
  std::string description;
};

/// Synthetic admissible inputs on `grid`; `bc_perturbation` adds ε·Z to Ψ,
/// which breaks ∂_ZΨ = 0 on R = 0 by exactly ε.
IdentityInputs identity_preset(IdentityPreset preset, const HalfPlaneGrid& grid, double bc_perturbation = 0.0);

}  // namespace ssblow::rigidity
