#include "ssblow/rigidity/pipeline.hpp"

#include <cmath>

#include "ssblow/errors.hpp"
#include "ssblow/hierarchy/report.hpp"
#include "ssblow/rigidity/diagnostics.hpp"
#include "ssblow/rigidity/endgame.hpp"
#include "ssblow/rigidity/half_plane.hpp"
#include "ssblow/sscalc/serialize.hpp"

namespace ssblow::rigidity {

using sscalc::ProfileRef;
using sscalc::SymExpr;

namespace {

// Drops every R-derivative of the listed fields and zeroes the listed
// vanishing fields.
sscalc::ProfileSubstitution reduction(std::vector<Field> z_only, std::vector<Field> vanishing) {
  return [z_only = std::move(z_only), vanishing = std::move(vanishing)](const ProfileRef& p) -> std::optional<SymExpr> {
    for (Field f : vanishing) {
      if (p.field == f) return SymExpr{};
    }
    for (Field f : z_only) {
      if (p.field == f && p.dR > 0) return SymExpr{};
    }
    return std::nullopt;
  };
}

bool free_of_R(const SymExpr& e, Field except) {
  for (const auto& t : e.terms()) {
    bool involves_except = false;
    for (const auto& f : t.factors) involves_except |= f.field == except;
    if (involves_except) continue;
    if (t.r_pow != 0) return false;
    for (const auto& f : t.factors) {
      if (f.dR != 0) return false;
    }
  }
  return true;
}

// Whether e = α·F + β·Z·∂_Z F for a single field F (nothing else).
bool is_scaling_equation(const SymExpr& e, Field f) {
  for (const auto& t : e.terms()) {
    if (t.factors.size() != 1 || t.factors[0].field != f || t.r_pow != 0 || t.factors[0].dR != 0) return false;
    const auto& p = t.factors[0];
    const bool plain = p.dZ == 0 && t.z_pow == 0;
    const bool scaling = p.dZ == 1 && t.z_pow == 1;
    if (!plain && !scaling) return false;
  }
  return true;
}

PipelineStep classify_step(std::string name, const SymExpr& reduced, Field field, const TrivialityVerdict& v) {
  PipelineStep s;
  s.name = std::move(name);
  s.equation = sscalc::to_latex(reduced) + " = 0";
  s.holds = is_scaling_equation(reduced, field) && v.conclusion == Conclusion::TrivialUnderDecay;
  s.detail = std::string(case_name(v.branch)) + ", c = " + to_string(v.coefficient) + ": " + v.reason;
  return s;
}

}  // namespace

PipelineReport single_profile_pipeline(const Rational& gamma) {
  if (gamma <= 0) throw DomainError("gamma must be positive");
  PipelineReport rep;
  rep.gamma = gamma;
  const hierarchy::HierarchyReport h = hierarchy::derive_hierarchy(hierarchy::AnsatzSpec::single(1));
  const SymExpr& u0 = h.find("u", 0)->lhs;
  const SymExpr& w0 = h.find("omega", 0)->lhs;
  const SymExpr& p0 = h.find("psi", 0)->lhs;
  const SymExpr& p1 = h.find("psi", 1)->lhs;

  {
    PipelineStep s{"stream_function_depends_on_Z", false, {}, sscalc::to_latex(p1) + " = 0"};
    s.holds = p1.size() == 1 && p1.terms()[0].factors.size() == 1 &&
              p1.terms()[0].factors[0] == ProfileRef{Field::Psi, 0, 1, 0} && p1.terms()[0].r_pow == 0 &&
              p1.terms()[0].z_pow == 0 && p1.terms()[0].coeff.is_constant();
    s.detail = "order-1 elliptic equation is a nonzero multiple of dPsi/dR";
    rep.steps.push_back(std::move(s));
  }
  {
    const SymExpr reduced = sscalc::substitute_profiles(p0, reduction({Field::Psi}, {}));
    PipelineStep s{"vorticity_depends_on_Z", free_of_R(reduced, Field::U), {}, sscalc::to_latex(reduced) + " = 0"};
    s.detail = "Omega = -Psi'' once Psi = Psi(Z)";
    rep.steps.push_back(std::move(s));
  }
  {
    const SymExpr reduced = sscalc::substitute_profiles(w0, reduction({Field::Psi, Field::Omega}, {}));
    PipelineStep s{"swirl_square_separates", free_of_R(reduced, Field::U), {}, sscalc::to_latex(reduced) + " = 0"};
    // Numeric side: an additive U² with decay in Z has constant g.
    HalfPlaneGrid g{-4.0, 0.0, -8.0, 8.0, 41, 81};
    const ScalarField2D u2 = g.sample([](double, double Z) { return std::exp(-Z * Z); });
    const SeparabilityResult split = separability_check(u2, true);
    s.holds = s.holds && split.residual <= 1e-12 && split.g_is_constant.value_or(false);
    s.detail = "d/dZ(U^2) depends on Z only, so U^2 = f(Z) + g(R); decay in Z makes g constant and U = U(Z)";
    rep.steps.push_back(std::move(s));
  }
  {
    const SymExpr reduced = sscalc::substitute_profiles(u0, reduction({Field::Psi, Field::Omega, Field::U}, {}));
    rep.swirl = classify_triviality(gamma, 0, Field::U);
    rep.steps.push_back(classify_step("swirl_vanishes", sscalc::specialize_gamma(reduced, gamma), Field::U, rep.swirl));
  }
  {
    const SymExpr reduced = sscalc::substitute_profiles(w0, reduction({Field::Psi, Field::Omega}, {Field::U}));
    rep.vorticity = classify_triviality(gamma, 0, Field::Omega);
    rep.steps.push_back(
        classify_step("vorticity_vanishes", sscalc::specialize_gamma(reduced, gamma), Field::Omega, rep.vorticity));
  }
  {
    const SymExpr reduced = sscalc::substitute_profiles(p0, reduction({Field::Psi}, {Field::Omega, Field::U}));
    PipelineStep s{"stream_function_affine", false, {}, sscalc::to_latex(reduced) + " = 0"};
    const bool is_second_derivative =
        reduced.size() == 1 && reduced.terms()[0].factors.size() == 1 &&
        reduced.terms()[0].factors[0] == ProfileRef{Field::Psi, 0, 0, 2} && reduced.terms()[0].r_pow == 0 &&
        reduced.terms()[0].z_pow == 0;
    const Endgame1dReport e = psi_endgame_1d(-10.0, 10.0, 201, -3.0, 7.0);
    rep.psi_a = e.a;
    rep.psi_b = e.b;
    s.holds = is_second_derivative && e.fit_residual <= 1e-10;
    s.detail = "Psi'' = 0 gives Psi = aZ + b";
    rep.steps.push_back(std::move(s));
  }
  rep.trivial = std::all_of(rep.steps.begin(), rep.steps.end(), [](const PipelineStep& s) { return s.holds; });
  return rep;
}

}  // namespace ssblow::rigidity
