#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ssblow/sscalc/calculus.hpp"
#include "ssblow/sscalc/expr.hpp"

namespace ssblow::sscalc {

// JSON: rationals are "p/q" strings. A coefficient is the array of its
// γ-polynomial coefficients, lowest power first, e.g. 1 − γ/2 is
// ["1","-1/2"]. Profile symbols are {"f":"U","k":0,"dR":1,"dZ":0} and
// exponents {"base":"-2","gamma":"1/2"}.
nlohmann::json to_json(const GammaPoly& p);
nlohmann::json to_json(const SsExponent& e);
nlohmann::json to_json(const ProfileRef& r);
nlohmann::json to_json(const SymExpr& e);
nlohmann::json to_json(const SymEquation& eq);

GammaPoly gamma_poly_from_json(const nlohmann::json& j);
SsExponent exponent_from_json(const nlohmann::json& j);
ProfileRef profile_from_json(const nlohmann::json& j);
SymExpr expr_from_json(const nlohmann::json& j);
SymEquation equation_from_json(const nlohmann::json& j);

/// LaTeX in the notation U, \Omega, \Psi, \partial_R, \partial_Z, \tau.
/// Series profiles carry their index as a subscript (U_{1}); single-profile
/// symbols (index 0) print bare unless `show_index` is set.
std::string to_latex(const GammaPoly& p);
std::string to_latex(const SsExponent& e);
std::string to_latex(const SymExpr& e, bool show_index = false);
/// "lhs = 0"
std::string to_latex(const SymEquation& eq, bool show_index = false);

/// Plain one-line rendering for diagnostics, e.g. "(1-1/2g)*U + g*R*U_R".
std::string to_text(const SymExpr& e);

}  // namespace ssblow::sscalc
