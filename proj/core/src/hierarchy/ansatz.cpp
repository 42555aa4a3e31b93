#include "ssblow/hierarchy/ansatz.hpp"

#include <stdexcept>
#include <string>

namespace ssblow::hierarchy {

using sscalc::diff_r;
using sscalc::diff_t;
using sscalc::diff_z;
using sscalc::Field;
using sscalc::GammaPoly;

std::string_view mode_name(AnsatzMode m) { return m == AnsatzMode::Single ? "single" : "generalized"; }

AnsatzMode parse_mode(std::string_view name) {
  if (name == "single") return AnsatzMode::Single;
  if (name == "generalized") return AnsatzMode::Generalized;
  throw std::invalid_argument("unknown ansatz mode '" + std::string(name) + "'");
}

void AnsatzSpec::validate() const {
  if (mode == AnsatzMode::Generalized && depth < 1) {
    throw std::invalid_argument("generalized ansatz needs depth >= 1");
  }
}

namespace {

SymExpr series(Field f, const SsExponent& lead, unsigned max_k) {
  SymExpr sum;
  for (unsigned k = 0; k <= max_k; ++k) {
    sum += SymExpr::tau(lead + sscalc::gamma_multiple(k)) * SymExpr::profile(f, k);
  }
  return sum;
}

// r = 1 + τ^γ R
SymExpr radius() { return SymExpr::constant(1) + SymExpr::tau(sscalc::gamma_multiple(1)) * SymExpr::R(); }

}  // namespace

AnsatzFields build_ansatz(const AnsatzSpec& a) {
  a.validate();
  const unsigned kmax = a.max_series_index();
  return {series(Field::U, a.u1_exp, kmax), series(Field::Omega, a.omega1_exp, kmax),
          series(Field::Psi, a.psi1_exp, kmax)};
}

Velocities velocities_from(const SymExpr& psi1) {
  const SymExpr r = radius();
  return {-(r * diff_z(psi1)), GammaPoly(2) * psi1 + r * diff_r(psi1)};
}

Velocities build_velocities(const AnsatzSpec& a) { return velocities_from(build_ansatz(a).psi1); }

SubstitutedSystem substitute(const AnsatzFields& f, unsigned geometric_order) {
  SubstitutedSystem out;
  out.inverse_radius = sscalc::geometric_expand(geometric_order);
  const Velocities v = velocities_from(f.psi1);

  const SymExpr dz_psi = diff_z(f.psi1);
  SymExpr u_lhs = diff_t(f.u1) + v.ur * diff_r(f.u1) + v.uz * diff_z(f.u1) - GammaPoly(2) * (f.u1 * dz_psi);
  SymExpr w_lhs = diff_t(f.omega1) + v.ur * diff_r(f.omega1) + v.uz * diff_z(f.omega1) - diff_z(f.u1 * f.u1);
  const SymExpr dr_psi = diff_r(f.psi1);
  SymExpr p_lhs = -(diff_r(dr_psi) + GammaPoly(3) * (out.inverse_radius.expr * dr_psi) + diff_z(dz_psi)) - f.omega1;

  out.equations = {SymEquation{std::move(u_lhs), "u"}, SymEquation{std::move(w_lhs), "omega"},
                   SymEquation{std::move(p_lhs), "psi"}};
  return out;
}

SubstitutedSystem substitute(const AnsatzSpec& a, unsigned geometric_order) {
  if (geometric_order < a.depth) {
    throw std::invalid_argument("geometric truncation order must be >= ansatz depth");
  }
  return substitute(build_ansatz(a), geometric_order);
}

SubstitutedSystem substitute(const AnsatzSpec& a) { return substitute(a, a.depth); }

std::size_t equation_index(std::string_view name) {
  for (std::size_t i = 0; i < kEquationNames.size(); ++i) {
    if (kEquationNames[i] == name) return i;
  }
  throw std::invalid_argument("unknown equation '" + std::string(name) + "'");
}

}  // namespace ssblow::hierarchy
