#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "ssblow/errors.hpp"
#include "ssblow/rigidity/report.hpp"

using namespace ssblow;
using namespace ssblow::rigidity;

namespace {

const Trace kUnitTrace = [](double, double) { return 1.0; };

}  // namespace

TEST(Homogeneity, Examples) {
  EXPECT_EQ(homogeneity_degree(2, 0, Field::U), 0);
  EXPECT_EQ(homogeneity_degree(1, 0, Field::Omega), -1);
  const Rational d = homogeneity_degree(parse_rational("2.91"), 0, Field::U);
  EXPECT_EQ(d, Rational(1, 2) - Rational(100, 291));
  EXPECT_NEAR(d.get_d(), 0.1563, 1e-4);
}

TEST(Homogeneity, PsiHasNoTransportEquation) {
  EXPECT_THROW(transport_coefficient(1, 0, Field::Psi), std::invalid_argument);
}

TEST(Classify, Examples) {
  const auto v = classify_triviality(2, 0, Field::U);
  EXPECT_EQ(v.branch, TrivialityCase::ZeroCoefficientRayConstant);
  EXPECT_EQ(v.conclusion, Conclusion::TrivialUnderDecay);
  const auto w = classify_triviality(Rational(1, 2), 3, Field::U);
  EXPECT_EQ(w.coefficient, Rational(-3, 4));
  EXPECT_EQ(w.branch, TrivialityCase::NonzeroCoefficient);
  EXPECT_EQ(w.conclusion, Conclusion::TrivialUnderDecay);
  EXPECT_THROW(classify_triviality(0, 0, Field::U), DomainError);
}

TEST(Classify, WithoutDecayEverythingIsInconclusive) {
  for (const Rational& g : {Rational(2, 5), Rational(1), Rational(2), Rational(4)}) {
    for (unsigned k = 0; k <= 5; ++k) {
      for (Field f : {Field::U, Field::Omega}) {
        EXPECT_EQ(classify_triviality(g, k, f, false).conclusion, Conclusion::Inconclusive);
      }
    }
  }
}

TEST(Classify, ZeroBranchExactlyAtDegenerateGammas) {
  for (unsigned k = 0; k <= 6; ++k) {
    EXPECT_EQ(classify_triviality(Rational(2, 2 * k + 1), k, Field::U).branch,
              TrivialityCase::ZeroCoefficientRayConstant);
    EXPECT_EQ(classify_triviality(Rational(2, 2 * k + 1) + Rational(1, 1000), k, Field::U).branch,
              TrivialityCase::NonzeroCoefficient);
    if (k > 0) {
      EXPECT_EQ(classify_triviality(Rational(1, k), k, Field::Omega).branch,
                TrivialityCase::ZeroCoefficientRayConstant);
    }
  }
  EXPECT_EQ(classify_triviality(Rational(2, 5), 2, Field::U).branch, TrivialityCase::ZeroCoefficientRayConstant);
}

TEST(Classify, TableAndThreshold) {
  const auto t = triviality_table(Rational(2, 5), 5);
  EXPECT_EQ(t.size(), 12u);
  EXPECT_EQ(integral_assumption_threshold(Rational(2, 5)), Rational(5, 2));
}

TEST(RaySolution, Examples) {
  const Trace trace = [](double uR, double uZ) { return 1.0 + 0.3 * uR + 0.2 * uZ * uZ; };
  EXPECT_DOUBLE_EQ(ray_solution(1.0, 0.0, trace, -1.0, 0.5), ray_solution(1.0, 0.0, trace, -2.0, 1.0));
  EXPECT_DOUBLE_EQ(ray_solution(2.0, 1.0, kUnitTrace, 0.0, 4.0), 0.5);
  EXPECT_THROW(ray_solution(2.0, 1.0, kUnitTrace, 0.0, 0.0), DomainError);
  EXPECT_THROW(ray_solution(2.0, 0.0, kUnitTrace, 0.0, 0.0), DomainError);
  EXPECT_EQ(ray_solution(2.0, -1.0, kUnitTrace, 0.0, 0.0), 0.0);
}

TEST(RaySolution, SolvesTransportByFiniteDifferences) {
  const Trace trace = [](double uR, double uZ) { return 1.0 + 0.3 * uR + 0.2 * uZ; };
  const double h = 1e-3;
  for (double gamma : {0.5, 2.0, 2.91}) {
    for (double c : {-1.0, 0.0, 0.75}) {
      for (double R = -2.0; R <= 0.0; R += 0.25) {
        for (double Z = -2.0; Z <= 2.0; Z += 0.5) {
          if (std::hypot(R, Z) < 1.5) continue;
          auto F = [&](double r, double z) { return ray_solution(gamma, c, trace, r, z); };
          const double FR = (F(R + h, Z) - F(R - h, Z)) / (2 * h);
          const double FZ = (F(R, Z + h) - F(R, Z - h)) / (2 * h);
          const double residual = c * F(R, Z) + gamma * (R * FR + Z * FZ);
          EXPECT_LE(std::abs(residual), 1e-6) << gamma << " " << c << " " << R << " " << Z;
        }
      }
    }
  }
}

TEST(RaySolution, AnnulusMaximaScaleByHomogeneity) {
  const Trace trace = [](double uR, double uZ) { return 1.0 - 0.4 * uR + 0.1 * uZ; };
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (double c : {-1.0, 0.5, 2.0}) {
      double inner = 0.0, outer = 0.0;
      for (int a = 0; a <= 200; ++a) {
        const double theta = std::numbers::pi / 2 + std::numbers::pi * a / 200.0;
        for (int r = 0; r <= 50; ++r) {
          const double rad = 1.0 + r / 50.0;
          inner = std::max(inner, std::abs(ray_solution(gamma, c, trace, rad * std::cos(theta), rad * std::sin(theta))));
          outer = std::max(outer, std::abs(ray_solution(gamma, c, trace, 2 * rad * std::cos(theta),
                                                        2 * rad * std::sin(theta))));
        }
      }
      EXPECT_NEAR(outer / inner, std::pow(2.0, -c / gamma), 1e-12);
    }
  }
}

TEST(Cutoff, ShapeAndSmoothness) {
  EXPECT_EQ(cutoff(0.0), 1.0);
  EXPECT_EQ(cutoff(1.0), 1.0);
  EXPECT_EQ(cutoff(2.0), 0.0);
  EXPECT_EQ(cutoff(3.0), 0.0);
  for (double s = 0.0; s < 2.5; s += 0.01) {
    EXPECT_LE(cutoff(s + 0.01), cutoff(s) + 1e-15);
    const double fd = (cutoff(s + 1e-6) - cutoff(s - 1e-6)) / 2e-6;
    EXPECT_NEAR(cutoff_derivative(s), fd, 1e-6);
  }
}

TEST(Separability, AdditiveInputIsExact) {
  HalfPlaneGrid g{-1.0, 0.0, -1.0, 1.0, 21, 41};
  const auto r = separability_check(g.sample([](double R, double Z) { return std::sin(Z) + R * R; }));
  EXPECT_LE(r.residual, 1e-12);
  const auto c = separability_check(g.sample([](double, double) { return 2.5; }));
  EXPECT_LE(c.residual, 1e-14);
  EXPECT_NEAR(c.f[3] + c.g[7], 2.5, 1e-14);
}

TEST(Separability, ProductIsNotAdditive) {
  HalfPlaneGrid g{-1.0, 0.0, -1.0, 1.0, 21, 41};
  const auto r = separability_check(g.sample([](double R, double Z) { return R * Z; }));
  // best additive fit leaves (R − R̄)(Z − Z̄), largest at a corner: 0.5·1
  EXPECT_NEAR(r.residual, 0.5, 1e-12);
  EXPECT_GT(r.residual, 0.1);
}

TEST(Separability, ResidualVanishesIffMixedDifferencesDo) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    ScalarField2D f(9, 13, -1.0, -1.0, 0.125, 1.0 / 6);
    std::vector<double> a(9), b(13);
    for (double& x : a) x = n(rng);
    for (double& x : b) x = n(rng);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 13; ++j) f(i, j) = a[i] + b[j];
    const bool perturb = trial % 2 == 1;
    if (perturb) f(4, 6) += 1e-3;
    double mixed = 0.0;
    for (std::size_t i = 0; i + 1 < 9; ++i)
      for (std::size_t j = 0; j + 1 < 13; ++j)
        mixed = std::max(mixed, std::abs(f(i + 1, j + 1) - f(i + 1, j) - f(i, j + 1) + f(i, j)));
    const double res = separability_check(f).residual;
    EXPECT_EQ(mixed <= 1e-12, res <= 1e-12) << mixed << " " << res;
  }
}

TEST(Separability, DecayFlag) {
  HalfPlaneGrid g{-2.0, 0.0, -6.0, 6.0, 21, 61};
  const auto only_z = separability_check(g.sample([](double, double Z) { return std::exp(-Z * Z); }), true);
  EXPECT_TRUE(only_z.g_is_constant.value());
  const auto with_r = separability_check(g.sample([](double R, double Z) { return std::exp(-Z * Z) + R; }), true);
  EXPECT_FALSE(with_r.g_is_constant.value());
  EXPECT_FALSE(separability_check(g.zeros()).g_is_constant.has_value());
}

TEST(MaxPrinciple, ZeroField) {
  HalfPlaneGrid g{-4.0, 0.0, -4.0, 4.0, 41, 81};
  const auto rep = max_principle_scan(g.zeros(), g.zeros(), 1.0, 0.5);
  EXPECT_FALSE(rep.nonzero_extremum);
  EXPECT_FALSE(rep.contradiction);
}

TEST(MaxPrinciple, MollifiedRaySolutionInterior) {
  // ray solution of degree 1/2 (γ = 2, c = −1) times exp(−|Y|²/16): the
  // maximum sits on the node (−2, 0).
  const Trace trace = [](double uR, double) { return 1.0 - uR; };
  for (double h : {0.1, 0.05}) {
    const auto n = static_cast<std::size_t>(std::lround(6.0 / h)) + 1;
    HalfPlaneGrid g{-6.0, 0.0, -6.0, 6.0, n, 2 * n - 1};
    const auto F = g.sample([&](double R, double Z) {
      return ray_solution(2.0, -1.0, trace, R, Z) * std::exp(-(R * R + Z * Z) / 16.0);
    });
    const auto rep = max_principle_scan(F, g.zeros(), 2.0, -1.0, 1e-6 + 10 * h * h);
    EXPECT_TRUE(rep.nonzero_extremum);
    EXPECT_FALSE(rep.on_boundary);
    EXPECT_NEAR(rep.R, -2.0, 1e-9);
    EXPECT_NEAR(rep.Z, 0.0, 1e-9);
    EXPECT_LE(std::abs(rep.transport_residual - (-1.0) * rep.value), 10 * h * h);
    EXPECT_TRUE(rep.contradiction);
  }
}

TEST(MaxPrinciple, BoundaryExtremumWithAdmissibleStreamFunction) {
  HalfPlaneGrid g{-4.0, 0.0, -4.0, 4.0, 81, 161};
  const double h = g.hR();
  const auto F = g.sample([](double R, double Z) { return std::exp(R - Z * Z); });
  const auto Psi = g.sample([](double R, double Z) { return R * std::cos(Z) + R * R; });
  const auto rep = max_principle_scan(F, Psi, 2.0, 0.0);
  EXPECT_TRUE(rep.on_boundary);
  EXPECT_LE(rep.boundary_condition_residual, 1e-14);
  EXPECT_LE(std::abs(rep.drift_term), 10 * h * h);
  EXPECT_LE(std::abs(rep.normal_drift), 1e-14);
}

TEST(Identity, ZeroField) {
  HalfPlaneGrid g{-10.0, 0.0, -10.0, 10.0, 101, 201};
  const auto rep = ibp_identity_check(g.zeros(), g.sample([](double R, double) { return -2 * R; }), 2.0, 2, 3.0);
  EXPECT_EQ(rep.lhs, 0.0);
  EXPECT_EQ(rep.rhs, 0.0);
  EXPECT_EQ(rep.boundary_term, 0.0);
}

TEST(Identity, RejectsBadParameters) {
  HalfPlaneGrid g{-10.0, 0.0, -10.0, 10.0, 21, 41};
  EXPECT_THROW(ibp_identity_check(g.zeros(), g.zeros(), 2.0, 3, 3.0), DomainError);
  EXPECT_THROW(ibp_identity_check(g.zeros(), g.zeros(), 2.0, 2, 0.0), DomainError);
}

TEST(Identity, CompactSupportMatchesRadialQuadrature) {
  const HalfPlaneGrid g;  // [−40, 0] × [−40, 40], h = 0.1
  const auto in = identity_preset(IdentityPreset::Compact, g);
  const auto v = ibp_identity_verdict(in.U, in.Psi, in.gamma, 2, 10.0);
  // U vanishes wherever ∇σ_ρ does not
  EXPECT_EQ(v.fine.rhs, 0.0);
  EXPECT_LE(std::abs(v.fine.boundary_term), 1e-12);
  const double radial = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [](double s) { return 2 * std::numbers::pi * 4.0 * s * std::exp(2.0 - 2.0 / (1.0 - s * s)); }, 0.0, 1.0, 10,
      1e-14);
  EXPECT_NEAR(v.fine.lhs, 2 * in.gamma * radial, 1e-6 * v.fine.lhs);
  EXPECT_NEAR(v.fine.transport_term, -v.fine.lhs, 1e-3 * v.fine.lhs);
  EXPECT_TRUE(v.passes) << v.fine.balance << " vs " << v.tolerance;
}

TEST(Identity, RaysPresetBalances) {
  const HalfPlaneGrid g;
  const auto in = identity_preset(IdentityPreset::Rays, g);
  const auto rep = ibp_identity_check(in.U, in.Psi, in.gamma, 2, 10.0);
  EXPECT_LE(std::abs(rep.lhs - rep.rhs), 1e-6 * std::max(std::abs(rep.lhs), 1.0));
  EXPECT_LE(std::abs(rep.boundary_term), 1e-8);
}

TEST(Identity, BoundaryConditionViolation) {
  const HalfPlaneGrid g;
  const auto bad = identity_preset(IdentityPreset::Rays, g, 1e-2);
  EXPECT_THROW(ibp_identity_check(bad.U, bad.Psi, bad.gamma, 2, 10.0), BoundaryViolation);
  IbpOptions lax;
  lax.enforce_boundary_condition = false;
  const auto b2 = ibp_identity_check(bad.U, bad.Psi, bad.gamma, 2, 10.0, lax).boundary_term;
  const auto small = identity_preset(IdentityPreset::Rays, g, 1e-3);
  const auto b3 = ibp_identity_check(small.U, small.Psi, small.gamma, 2, 10.0, lax).boundary_term;
  EXPECT_NEAR(b2 / b3, 10.0, 2.0);
}

TEST(Identity, RhoDoublingFollowsHomogeneity) {
  // Ψ ≡ 0 puts the stagnation point at the origin; U is of degree 0, so the
  // cutoff integrals grow like ρ² and the annulus integral never decays.
  HalfPlaneGrid g{-80.0, 0.0, -80.0, 80.0, 401, 801};
  const auto U = g.sample([](double R, double Z) {
    const double r2 = R * R + Z * Z;
    return std::sqrt(1.0 + 0.5 * (r2 > 0 ? (R * R - Z * Z) / r2 : 0.0));
  });
  std::vector<double> lhs;
  for (double rho : {10.0, 20.0, 40.0}) {
    const auto rep = ibp_identity_check(U, g.zeros(), 2.0, 2, rho);
    EXPECT_LE(std::abs(rep.lhs - rep.rhs), 1e-6 * rep.lhs);
    lhs.push_back(rep.lhs);
  }
  EXPECT_NEAR(lhs[1] / lhs[0], 4.0, 1e-3);
  EXPECT_NEAR(lhs[2] / lhs[1], 4.0, 1e-3);
}

TEST(Endgame, AffineData) {
  HalfPlaneGrid g{-10.0, 0.0, -10.0, 10.0, 41, 81};
  const auto rep = psi_endgame(true, g, [](double R, double) { return 3 * R + 7; });
  EXPECT_NEAR(rep.a, 3.0, 1e-10);
  EXPECT_NEAR(rep.b, 7.0, 1e-10);
  EXPECT_LE(rep.fit_residual, 1e-8);
}

TEST(Endgame, RejectsDataViolatingBoundaryCondition) {
  HalfPlaneGrid g{-10.0, 0.0, -10.0, 10.0, 41, 81};
  EXPECT_THROW(psi_endgame(true, g, [](double R, double Z) { return R * R - Z * Z; }), BoundaryViolation);
  EXPECT_THROW(psi_endgame(false, g, [](double R, double) { return R; }), DomainError);
}

TEST(Endgame, InteriorGradientDecaysWithTruncation) {
  // sublinear data vanishing on R = 0: the half-plane limit is Ψ = 0
  std::vector<double> dz;
  for (double L : {10.0, 20.0, 40.0}) {
    const auto n = static_cast<std::size_t>(2 * L) + 1;
    HalfPlaneGrid g{-L, 0.0, -L, L, n, 2 * n - 1};
    const auto rep = psi_endgame(true, g, [](double R, double Z) { return std::log(1.0 + R * R) * (1.0 + 0.1 * Z / (1.0 + std::abs(Z))); });
    dz.push_back(rep.interior_dz_max);
  }
  EXPECT_LT(dz[1], dz[0]);
  EXPECT_LT(dz[2], dz[1]);
}

TEST(Endgame, OneDimensional) {
  const auto rep = psi_endgame_1d(-5.0, 5.0, 101, -8.0, 12.0);
  EXPECT_NEAR(rep.a, 2.0, 1e-12);
  EXPECT_NEAR(rep.b, 2.0, 1e-12);
  EXPECT_LE(rep.fit_residual, 1e-12);
}

namespace {

std::vector<std::pair<double, double>> window_series(const std::function<double(double)>& delta) {
  std::vector<std::pair<double, double>> s;
  for (int k = 1; k <= 12; ++k) {
    const double t = 1.0 - std::pow(10.0, -k / 3.0);
    s.emplace_back(t, delta(1.0 - t));
  }
  return s;
}

}  // namespace

TEST(Window, SelfSimilarWidth) {
  const auto v = window_classify(window_series([](double tau) { return std::pow(tau, 0.7); }), 1.0, 0.7);
  EXPECT_EQ(v.tag, WindowClass::ShrinksSelfSimilar);
  EXPECT_NEAR(v.ratio_first, 1.0, 1e-12);
  EXPECT_TRUE(v.delta_vanishes);
}

TEST(Window, WiderWidth) {
  const auto v = window_classify(window_series([](double tau) { return std::pow(tau, 0.35); }), 1.0, 0.7);
  EXPECT_EQ(v.tag, WindowClass::WiderThanSelfSimilar);
  EXPECT_TRUE(v.delta_vanishes);
  EXPECT_NEAR(v.ratio_growth, 0.35, 1e-9);
}

TEST(Window, ConstantWidth) {
  const auto v = window_classify(window_series([](double) { return 0.3; }), 1.0, 0.7);
  EXPECT_EQ(v.tag, WindowClass::WiderThanSelfSimilar);
  EXPECT_FALSE(v.delta_vanishes);
}

TEST(Window, TooFewSamplesAndBadInput) {
  std::vector<std::pair<double, double>> s = {{0.1, 1.0}, {0.2, 0.9}, {0.3, 0.8}};
  EXPECT_EQ(window_classify(s, 1.0, 1.0).tag, WindowClass::Indeterminate);
  s.push_back({0.25, 0.7});
  EXPECT_THROW(window_classify(s, 1.0, 1.0), DomainError);
  std::vector<std::pair<double, double>> neg = {{0.1, -1.0}};
  EXPECT_THROW(window_classify(neg, 1.0, 1.0), DomainError);
}

TEST(Pipeline, TrivialForEveryGamma) {
  for (const char* g : {"2/5", "1/2", "1", "2", "2.91", "4"}) {
    const auto rep = single_profile_pipeline(parse_rational(g));
    EXPECT_TRUE(rep.trivial) << g;
    for (const auto& s : rep.steps) EXPECT_TRUE(s.holds) << g << " " << s.name << ": " << s.equation;
    EXPECT_NEAR(rep.psi_a, 0.5, 1e-12);
    EXPECT_NEAR(rep.psi_b, 2.0, 1e-12);
  }
  EXPECT_EQ(single_profile_pipeline(2).swirl.branch, TrivialityCase::ZeroCoefficientRayConstant);
  EXPECT_EQ(single_profile_pipeline(1).swirl.branch, TrivialityCase::NonzeroCoefficient);
}

TEST(Report, SchemaTag) {
  const auto doc = rigidity_document("triviality", {{"rows", {to_json(classify_triviality(2, 0, Field::U))}}});
  EXPECT_EQ(doc["schema"], "rigidity/1");
  EXPECT_EQ(doc["rows"][0]["case"], "zero_coefficient_ray_constant");
  EXPECT_EQ(doc["rows"][0]["degree"], "0");
}
