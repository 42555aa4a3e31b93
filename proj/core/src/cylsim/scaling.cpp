#include "ssblow/cylsim/scaling.hpp"

#include <cmath>

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

std::string_view swirl_decay_name(SwirlDecay d) {
  switch (d) {
    case SwirlDecay::Decays: return "decays";
    case SwirlDecay::Borderline: return "borderline";
    case SwirlDecay::DoesNotApply: return "does_not_apply";
  }
  return "?";
}

ScalingReport energy_scaling(const Rational& gamma, std::span<const double> L_values) {
  if (sgn(gamma) <= 0) throw DomainError("gamma must be positive");
  ScalingReport rep;
  rep.gamma = gamma;
  const Rational inv = Rational(1) / gamma;
  rep.swirl_energy = 1 - 2 * inv;
  rep.gradient_energy = 2 - 2 * inv;
  rep.swirl_pointwise = Rational(1, 2) - inv;
  rep.gradient_pointwise = 1 - inv;
  for (auto* q : {&rep.swirl_energy, &rep.gradient_energy, &rep.swirl_pointwise, &rep.gradient_pointwise})
    q->canonicalize();

  rep.gradient_sublinear = rep.gradient_pointwise < 1;
  const int s = sgn(rep.swirl_pointwise);
  rep.swirl = s < 0 ? SwirlDecay::Decays : (s == 0 ? SwirlDecay::Borderline : SwirlDecay::DoesNotApply);

  rep.verdicts.push_back("|grad Psi| = o(|Y|) for all gamma > 0");
  switch (rep.swirl) {
    case SwirlDecay::Decays:
      rep.verdicts.push_back("|U| = o(1) suggested since gamma < 2");
      break;
    case SwirlDecay::Borderline:
      rep.verdicts.push_back("gamma = 2 is borderline: |U| stays bounded but is not o(1)");
      break;
    case SwirlDecay::DoesNotApply:
      rep.verdicts.push_back("gamma > 2: the swirl bound grows, the consideration does not apply");
      break;
  }
  rep.verdicts.push_back("no information on Omega");

  const double e_swirl = rep.swirl_energy.get_d(), e_grad = rep.gradient_energy.get_d();
  for (double L : L_values) {
    if (!(L > 0.0)) throw DomainError("box sizes L must be positive");
    rep.rows.push_back({L, std::pow(L, e_swirl), std::pow(L, e_grad)});
  }
  return rep;
}

}  // namespace ssblow::cylsim
