#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ssblow/rational.hpp"
#include "ssblow/sscalc/profile.hpp"

namespace ssblow::rigidity {

using sscalc::Field;

// Decoupled transport equations for the series index k:
//   c·F + γY·∇F = 0,  c = 1 − γ/2 − kγ (swirl U_k),  c = 1 − kγ (vorticity Ω_k).

/// Zeroth-order coefficient c. `field` must be U or Omega.
Rational transport_coefficient(const Rational& gamma, unsigned k, Field field);

/// Degree d = −c/γ of the homogeneous solutions.
Rational homogeneity_degree(const Rational& gamma, unsigned k, Field field);

enum class TrivialityCase { NonzeroCoefficient, ZeroCoefficientRayConstant };
enum class Conclusion { TrivialUnderDecay, Inconclusive };

std::string_view case_name(TrivialityCase c);       // "nonzero_coefficient", ...
std::string_view conclusion_name(Conclusion c);     // "trivial_under_decay", "inconclusive"

struct TrivialityVerdict {
  Rational gamma;
  unsigned k = 0;
  Field field = Field::U;
  Rational coefficient;
  Rational degree;
  TrivialityCase branch = TrivialityCase::NonzeroCoefficient;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string reason;
};

/// Requires γ > 0 (DomainError otherwise).
TrivialityVerdict classify_triviality(const Rational& gamma, unsigned k, Field field, bool assume_decay = true);

/// Verdicts for U_k and Ω_k, k = 0..kmax, in that order.
std::vector<TrivialityVerdict> triviality_table(const Rational& gamma, unsigned kmax, bool assume_decay = true);

/// Largest k for which the integral decay assumption is still needed, i.e.
/// the k ≤ 1/γ range. Returned as 1/γ.
Rational integral_assumption_threshold(const Rational& gamma);

/// Trace on the unit half-circle, given the unit vector (R/|Y|, Z/|Y|).
using Trace = std::function<double(double, double)>;

/// |Y|^{−c/γ}·trace(Y/|Y|), the ray solution of cF + γY·∇F = 0.
/// At Y = 0 returns 0 when c/γ < 0 and throws DomainError otherwise.
double ray_solution(double gamma, double c, const Trace& trace, double R, double Z);

}  // namespace ssblow::rigidity
