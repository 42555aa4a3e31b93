#pragma once

#include <array>

#include "ssblow/sscalc/calculus.hpp"
#include "ssblow/sscalc/expr.hpp"

namespace ssblow::hierarchy {

using sscalc::SsExponent;
using sscalc::SymEquation;
using sscalc::SymExpr;

enum class AnsatzMode { Single, Generalized };

std::string_view mode_name(AnsatzMode m);  // "single", "generalized"
AnsatzMode parse_mode(std::string_view name);

/// Self-similar ansatz
///   u₁ = τ^{u1_exp} Σ_k τ^{kγ} U_k(R,Z),   ω₁ = τ^{omega1_exp} Σ_k τ^{kγ} Ω_k,
///   ψ₁ = τ^{psi1_exp} Σ_k τ^{kγ} Ψ_k,
/// with the sums running to `depth` in generalized mode and reduced to the
/// k = 0 term in single mode. `depth` is also the highest collected order.
struct AnsatzSpec {
  AnsatzMode mode = AnsatzMode::Single;
  unsigned depth = 1;
  SsExponent u1_exp{-1, Rational(1, 2)};
  SsExponent omega1_exp{-1, 0};
  SsExponent psi1_exp{-1, 2};

  static AnsatzSpec single(unsigned depth = 1) { return {AnsatzMode::Single, depth}; }
  static AnsatzSpec generalized(unsigned depth = 1) { return {AnsatzMode::Generalized, depth}; }

  /// Highest series index carried by the profile sums.
  unsigned max_series_index() const { return mode == AnsatzMode::Single ? 0 : depth; }
  /// Throws std::invalid_argument when depth = 0 in generalized mode.
  void validate() const;
};

/// The three unknowns written out as expressions.
struct AnsatzFields {
  SymExpr u1;
  SymExpr omega1;
  SymExpr psi1;
};

AnsatzFields build_ansatz(const AnsatzSpec& a);

/// Meridional velocity from ψ₁ with r = 1 + τ^γR:
///   u^r = −r ∂_zψ₁,   u^z = 2ψ₁ + r ∂_rψ₁.
struct Velocities {
  SymExpr ur;
  SymExpr uz;
};
Velocities velocities_from(const SymExpr& psi1);
Velocities build_velocities(const AnsatzSpec& a);

/// The transformed axisymmetric system, each written as lhs = 0:
///   ∂_t u₁ + u^r∂_r u₁ + u^z∂_z u₁ − 2u₁∂_zψ₁ = 0
///   ∂_t ω₁ + u^r∂_r ω₁ + u^z∂_z ω₁ − ∂_z(u₁²) = 0
///   −(∂_r² + (3/r)∂_r + ∂_z²)ψ₁ − ω₁ = 0
/// The 1/r in the elliptic equation is a truncated geometric series.
struct SubstitutedSystem {
  std::array<SymEquation, 3> equations;  // labels "u", "omega", "psi"
  sscalc::TruncatedSeries inverse_radius;
};

SubstitutedSystem substitute(const AnsatzFields& fields, unsigned geometric_order);
/// geometric_order defaults to the ansatz depth and must not be smaller.
SubstitutedSystem substitute(const AnsatzSpec& a);
SubstitutedSystem substitute(const AnsatzSpec& a, unsigned geometric_order);

/// Position of the named equation in SubstitutedSystem::equations.
std::size_t equation_index(std::string_view name);
inline constexpr std::array<std::string_view, 3> kEquationNames{"u", "omega", "psi"};

}  // namespace ssblow::hierarchy
