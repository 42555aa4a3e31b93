#include "ssblow/rigidity/triviality.hpp"

#include <cmath>
#include <stdexcept>

#include "ssblow/errors.hpp"

namespace ssblow::rigidity {

namespace {

void require_positive(const Rational& gamma) {
  if (gamma <= 0) throw DomainError("gamma must be positive, got " + to_string(gamma));
}

}  // namespace

Rational transport_coefficient(const Rational& gamma, unsigned k, Field field) {
  switch (field) {
    case Field::U:
      return Rational(1) - gamma / 2 - Rational(k) * gamma;
    case Field::Omega:
      return Rational(1) - Rational(k) * gamma;
    case Field::Psi:
      break;
  }
  throw std::invalid_argument("transport coefficient is defined for U and Omega only");
}

Rational homogeneity_degree(const Rational& gamma, unsigned k, Field field) {
  require_positive(gamma);
  return -transport_coefficient(gamma, k, field) / gamma;
}

std::string_view case_name(TrivialityCase c) {
  return c == TrivialityCase::NonzeroCoefficient ? "nonzero_coefficient" : "zero_coefficient_ray_constant";
}

std::string_view conclusion_name(Conclusion c) {
  return c == Conclusion::TrivialUnderDecay ? "trivial_under_decay" : "inconclusive";
}

TrivialityVerdict classify_triviality(const Rational& gamma, unsigned k, Field field, bool assume_decay) {
  require_positive(gamma);
  TrivialityVerdict v;
  v.gamma = gamma;
  v.k = k;
  v.field = field;
  v.coefficient = transport_coefficient(gamma, k, field);
  v.degree = -v.coefficient / gamma;
  if (v.coefficient == 0) {
    v.branch = TrivialityCase::ZeroCoefficientRayConstant;
    v.reason = "constant along rays; decay at infinity forces zero";
  } else {
    v.branch = TrivialityCase::NonzeroCoefficient;
    v.reason = v.degree > 0 ? "homogeneous of positive degree: unbounded along rays toward infinity"
                            : "homogeneous of negative degree: unbounded toward the origin";
  }
  if (assume_decay) {
    v.conclusion = Conclusion::TrivialUnderDecay;
  } else {
    v.conclusion = Conclusion::Inconclusive;
    v.reason = "decay hypothesis not assumed";
  }
  return v;
}

std::vector<TrivialityVerdict> triviality_table(const Rational& gamma, unsigned kmax, bool assume_decay) {
  std::vector<TrivialityVerdict> out;
  for (unsigned k = 0; k <= kmax; ++k) {
    out.push_back(classify_triviality(gamma, k, Field::U, assume_decay));
    out.push_back(classify_triviality(gamma, k, Field::Omega, assume_decay));
  }
  return out;
}

Rational integral_assumption_threshold(const Rational& gamma) {
  require_positive(gamma);
  return Rational(1) / gamma;
}

double ray_solution(double gamma, double c, const Trace& trace, double R, double Z) {
  if (!(gamma > 0)) throw DomainError("gamma must be positive");
  const double exponent = -c / gamma;
  const double radius = std::hypot(R, Z);
  if (radius == 0.0) {
    if (exponent > 0) return 0.0;
    throw DomainError("ray solution is not defined at the origin for c/gamma >= 0");
  }
  return std::pow(radius, exponent) * trace(R / radius, Z / radius);
}

}  // namespace ssblow::rigidity
