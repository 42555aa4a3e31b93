#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "ssblow/errors.hpp"
#include "ssblow/sscalc/expr.hpp"

namespace ssblow::sscalc {

/// Supplies the value of a profile derivative at (R, Z), or nullopt when
/// that symbol is not bound.
template <class T>
using ProfileBindings = std::function<std::optional<T>(const ProfileRef&, const T& R, const T& Z)>;

/// Numerically evaluates `e` at (R, Z) with τ^γ := tau_pow_gamma and
/// τ := tau_pow_gamma^{1/γ}. T may be double or a multiprecision float.
/// Throws MissingBinding for unbound profile symbols.
template <class T>
T eval_numeric(const SymExpr& e, const ProfileBindings<T>& bindings, const T& R, const T& Z,
               const T& tau_pow_gamma, const T& gamma) {
  using std::pow;
  const T tau = pow(tau_pow_gamma, T(1) / gamma);
  T total(0);
  for (const SymTerm& term : e.terms()) {
    T value = term.coeff.eval_as<T>(gamma);
    for (std::uint32_t i = 0; i < term.r_pow; ++i) value *= R;
    for (std::uint32_t i = 0; i < term.z_pow; ++i) value *= Z;
    for (const ProfileRef& ref : term.factors) {
      std::optional<T> v = bindings(ref, R, Z);
      if (!v) {
        throw MissingBinding("no evaluator for " + std::string(field_name(ref.field)) + "_" +
                             std::to_string(ref.k) + " dR=" + std::to_string(ref.dR) +
                             " dZ=" + std::to_string(ref.dZ));
      }
      value *= *v;
    }
    if (term.tau.base != 0) value *= pow(tau, rational_to<T>(term.tau.base));
    if (term.tau.gamma_coeff != 0) value *= pow(tau_pow_gamma, rational_to<T>(term.tau.gamma_coeff));
    total += value;
  }
  return total;
}

}  // namespace ssblow::sscalc
