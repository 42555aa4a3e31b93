#include "ssblow/hierarchy/references.hpp"

namespace ssblow::hierarchy {

using sscalc::Field;
using sscalc::GammaPoly;

namespace notation {

SymExpr sym(Field f, unsigned k, unsigned dR, unsigned dZ) { return SymExpr::profile(f, k, dR, dZ); }

SymExpr y_dot_grad(Field f, unsigned k) {
  return SymExpr::R() * sym(f, k, 1, 0) + SymExpr::Z() * sym(f, k, 0, 1);
}

SymExpr perp_dot_grad(unsigned j, Field f, unsigned k) {
  return -(sym(Field::Psi, j, 0, 1) * sym(f, k, 1, 0)) + sym(Field::Psi, j, 1, 0) * sym(f, k, 0, 1);
}

SymExpr laplacian(Field f, unsigned k) { return sym(f, k, 2, 0) + sym(f, k, 0, 2); }

}  // namespace notation

namespace {

using namespace notation;

const GammaPoly kGamma = GammaPoly::gamma();
GammaPoly c(const Rational& c0, const Rational& c1) { return GammaPoly::affine(c0, c1); }

ReferenceEquation ref(std::string id, std::string eq, unsigned order, SymExpr lhs) {
  return {std::move(id), std::move(eq), order, std::move(lhs), false, {}};
}

// Leading-order profile system for series index k = 0 (shared by both modes).
std::vector<ReferenceEquation> leading(const std::string& prefix) {
  std::vector<ReferenceEquation> out;
  // (1 − γ/2)U + γY·∇U + ∇⊥Ψ·∇U = 0
  out.push_back(ref(prefix + ".order0.u", "u", 0,
                    c(1, Rational(-1, 2)) * sym(Field::U) + kGamma * y_dot_grad(Field::U) +
                        perp_dot_grad(0, Field::U)));
  // Ω + γY·∇Ω + ∇⊥Ψ·∇Ω = ∂_Z U²
  out.push_back(ref(prefix + ".order0.omega", "omega", 0,
                    sym(Field::Omega) + kGamma * y_dot_grad(Field::Omega) + perp_dot_grad(0, Field::Omega) -
                        GammaPoly(2) * (sym(Field::U) * sym(Field::U, 0, 0, 1))));
  // −ΔΨ = Ω
  out.push_back(ref(prefix + ".order0.psi", "psi", 0, -laplacian(Field::Psi) - sym(Field::Omega)));
  return out;
}

}  // namespace

std::vector<ReferenceEquation> reference_equations(AnsatzMode mode) {
  if (mode == AnsatzMode::Single) {
    auto out = leading("single");
    // R∇⊥Ψ·∇U + 2Ψ∂_Z U = 2U∂_ZΨ
    out.push_back(ref("single.order1.u", "u", 1,
                      SymExpr::R() * perp_dot_grad(0, Field::U) +
                          GammaPoly(2) * (sym(Field::Psi) * sym(Field::U, 0, 0, 1)) -
                          GammaPoly(2) * (sym(Field::U) * sym(Field::Psi, 0, 0, 1))));
    // R∇⊥Ψ·∇Ω + 2Ψ∂_ZΩ = 0
    out.push_back(ref("single.order1.omega", "omega", 1,
                      SymExpr::R() * perp_dot_grad(0, Field::Omega) +
                          GammaPoly(2) * (sym(Field::Psi) * sym(Field::Omega, 0, 0, 1))));
    // ∂_RΨ = 0
    out.push_back(ref("single.order1.psi", "psi", 1, sym(Field::Psi, 0, 1, 0)));
    return out;
  }

  auto out = leading("generalized");
  // (1 − 3γ/2)U₁ + γY·∇U₁ + ∇⊥Ψ₀·∇U₁ + ∇⊥Ψ₁·∇U₀ + R∇⊥Ψ₀·∇U₀ + 2Ψ₀∂_Z U₀ = 2U₀∂_ZΨ₀
  out.push_back(ref("generalized.order1.u", "u", 1,
                    c(1, Rational(-3, 2)) * sym(Field::U, 1) + kGamma * y_dot_grad(Field::U, 1) +
                        perp_dot_grad(0, Field::U, 1) + perp_dot_grad(1, Field::U, 0) +
                        SymExpr::R() * perp_dot_grad(0, Field::U, 0) +
                        GammaPoly(2) * (sym(Field::Psi, 0) * sym(Field::U, 0, 0, 1)) -
                        GammaPoly(2) * (sym(Field::U, 0) * sym(Field::Psi, 0, 0, 1))));
  // (1 − γ)Ω₁ + γY·∇Ω₁ + ∇⊥Ψ₀·∇Ω₁ + ∇⊥Ψ₁·∇Ω₀ + R∇⊥Ψ₀·∇Ω₀ + 2Ψ₀∂_ZΩ₀ = ∂_Z(2U₀U₁)
  out.push_back(ref("generalized.order1.omega", "omega", 1,
                    c(1, -1) * sym(Field::Omega, 1) + kGamma * y_dot_grad(Field::Omega, 1) +
                        perp_dot_grad(0, Field::Omega, 1) + perp_dot_grad(1, Field::Omega, 0) +
                        SymExpr::R() * perp_dot_grad(0, Field::Omega, 0) +
                        GammaPoly(2) * (sym(Field::Psi, 0) * sym(Field::Omega, 0, 0, 1)) -
                        GammaPoly(2) * (sym(Field::U, 0, 0, 1) * sym(Field::U, 1)) -
                        GammaPoly(2) * (sym(Field::U, 0) * sym(Field::U, 1, 0, 1))));
  // −ΔΨ₁ + ∂_RΨ₀ = Ω₁, as published.
  ReferenceEquation psi1 = ref("generalized.order1.psi", "psi", 1,
                               -laplacian(Field::Psi, 1) + sym(Field::Psi, 0, 1, 0) - sym(Field::Omega, 1));
  psi1.known_discrepancy = true;
  psi1.note =
      "published coefficient of d_R Psi_0 is +1; expanding the 3/r term gives -3. "
      "Not used downstream: the term vanishes under the induction hypothesis.";
  out.push_back(std::move(psi1));
  return out;
}

std::vector<ReferenceEquation> induction_references(unsigned k) {
  const std::string p = "induction.k" + std::to_string(k);
  const Rational kk(k);
  return {
      // (1 − γ/2 − kγ)U_k + γY·∇U_k = 0
      ref(p + ".u", "u", k, c(1, Rational(-1, 2) - kk) * sym(Field::U, k) + kGamma * y_dot_grad(Field::U, k)),
      // (1 − kγ)Ω_k + γY·∇Ω_k = 0
      ref(p + ".omega", "omega", k, c(1, -kk) * sym(Field::Omega, k) + kGamma * y_dot_grad(Field::Omega, k)),
      // −ΔΨ_k = Ω_k
      ref(p + ".psi", "psi", k, -laplacian(Field::Psi, k) - sym(Field::Omega, k)),
  };
}

std::vector<ReferenceEquation> substituted_references(unsigned geometric_order) {
  auto tau = [](const Rational& a, const Rational& b) { return SymExpr::tau({a, b}); };
  const SymExpr tg_r_plus_1 = tau(0, 1) * SymExpr::R() + SymExpr::constant(1);  // {τ^γR + 1}
  const SymExpr inv = sscalc::geometric_expand(geometric_order).expr;
  const SymExpr U = sym(Field::U), W = sym(Field::Omega), P = sym(Field::Psi);
  const SymExpr P_R = sym(Field::Psi, 0, 1, 0), P_Z = sym(Field::Psi, 0, 0, 1);

  // u-equation with every τ-power written as published.
  SymExpr u = tau(-2, Rational(1, 2)) * (c(1, Rational(-1, 2)) * U) +
              tau(-2, Rational(1, 2)) * (kGamma * y_dot_grad(Field::U)) -
              tg_r_plus_1 * tau(-2, Rational(1, 2)) * P_Z * sym(Field::U, 0, 1, 0) +
              (GammaPoly(2) * tau(-1, 2) * P + tg_r_plus_1 * tau(-1, 1) * P_R) * tau(-1, Rational(-1, 2)) *
                  sym(Field::U, 0, 0, 1) -
              GammaPoly(2) * (tau(-2, Rational(3, 2)) * U * P_Z);

  SymExpr w = tau(-2, 0) * W + kGamma * (tau(-2, 0) * y_dot_grad(Field::Omega)) -
              tg_r_plus_1 * tau(-2, 0) * P_Z * sym(Field::Omega, 0, 1, 0) +
              (GammaPoly(2) * tau(-1, 2) * P + tg_r_plus_1 * tau(-1, 1) * P_R) * tau(-1, -1) *
                  sym(Field::Omega, 0, 0, 1) -
              tau(-2, 0) * (GammaPoly(2) * (U * sym(Field::U, 0, 0, 1)));

  SymExpr p = -(tau(-1, 0) * laplacian(Field::Psi)) - GammaPoly(3) * (tau(-1, 1) * inv * P_R) - tau(-1, 0) * W;

  return {ref("single.substituted.u", "u", 0, std::move(u)), ref("single.substituted.omega", "omega", 0, std::move(w)),
          ref("single.substituted.psi", "psi", 0, std::move(p))};
}

}  // namespace ssblow::hierarchy
