#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssblow/rational.hpp"

namespace ssblow::cylsim {

enum class SwirlDecay { Decays, Borderline, DoesNotApply };
std::string_view swirl_decay_name(SwirlDecay d);  // "decays", "borderline", "does_not_apply"

struct ScalingRow {
  double L = 0.0;
  double swirl_energy_bound = 0.0;
  double gradient_energy_bound = 0.0;
};

struct ScalingReport {
  Rational gamma;
  /// Averaged |U|² over the L-box grows at most like L^{swirl_energy}.
  Rational swirl_energy;
  Rational gradient_energy;
  /// Suggested pointwise growth |U| ≲ |Y|^{swirl_pointwise}.
  Rational swirl_pointwise;
  Rational gradient_pointwise;
  bool gradient_sublinear = true;
  SwirlDecay swirl = SwirlDecay::DoesNotApply;
  std::vector<std::string> verdicts;
  std::vector<ScalingRow> rows;
};

/// Throws DomainError unless γ > 0 and every L > 0.
ScalingReport energy_scaling(const Rational& gamma, std::span<const double> L_values);

}  // namespace ssblow::cylsim
