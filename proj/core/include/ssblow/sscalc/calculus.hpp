#pragma once

#include <functional>
#include <map>
#include <optional>

#include "ssblow/sscalc/expr.hpp"

namespace ssblow::sscalc {

// Self-similar variables: R = (r − 1)τ^{−γ}, Z = zτ^{−γ}, τ = T − t.
// Profiles are functions of (R, Z) only.

/// ∂/∂R and ∂/∂Z in the self-similar variables, holding τ fixed.
SymExpr partial_R(const SymExpr& e);
SymExpr partial_Z(const SymExpr& e);

/// Physical ∂_r = τ^{−γ}∂_R and ∂_z = τ^{−γ}∂_Z.
SymExpr diff_r(const SymExpr& e);
SymExpr diff_z(const SymExpr& e);

/// Physical time derivative ∂_t at fixed (r, z):
///   ∂_t τ^{a+bγ} = −(a+bγ)τ^{a+bγ−1},  ∂_t F(R,Z) = γτ^{−1}(R∂_R + Z∂_Z)F,
/// with the product rule throughout (explicit R, Z powers included).
SymExpr diff_t(const SymExpr& e);

/// Truncated 1/(1 + τ^γ R) = Σ_{m=0}^{order} (−1)^m R^m τ^{mγ}.
struct TruncatedSeries {
  SymExpr expr;
  unsigned order = 0;
  /// The dropped tail is O(τ^{remainder}) for bounded R.
  SsExponent remainder;
};
TruncatedSeries geometric_expand(unsigned order);

/// Coefficient equations of τ^{base + kγ}, k = 0, 1, ...
struct OrderCollection {
  SsExponent base;
  std::map<unsigned, SymEquation> orders;
};

/// Splits an equation by τ-power. Every exponent must equal base + kγ with
/// a common base and k ∈ ℕ; otherwise throws CommensurabilityError. The
/// returned per-order equations carry τ^0.
OrderCollection collect_orders(const SymEquation& eq);

/// Terms of `e` carrying exactly τ^{exponent}, with τ stripped.
SymExpr tau_coefficient(const SymExpr& e, const SsExponent& exponent);

/// Σ_k τ^{base + kγ}·order_k.
SymExpr reconstruct(const OrderCollection& collection);

/// Replaces every occurrence of a profile symbol by an expression; factors
/// mapped to std::nullopt are kept unchanged.
using ProfileSubstitution = std::function<std::optional<SymExpr>(const ProfileRef&)>;
SymExpr substitute_profiles(const SymExpr& e, const ProfileSubstitution& sub);

/// Evaluates every γ-polynomial coefficient at a concrete γ (the
/// τ-exponents stay symbolic).
SymExpr specialize_gamma(const SymExpr& e, const Rational& gamma);

/// Highest derivative order dR + dZ over all factors.
unsigned max_derivative_order(const SymExpr& e);

}  // namespace ssblow::sscalc
