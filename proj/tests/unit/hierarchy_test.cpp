#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <fstream>
#include <random>
#include <sstream>

#include "physical_residual.hpp"
#include "profiles.hpp"
#include "ssblow/hierarchy/report.hpp"
#include "ssblow/sscalc/eval.hpp"
#include "ssblow/sscalc/serialize.hpp"

using namespace ssblow;
using namespace ssblow::hierarchy;
using sscalc::Field;
using sscalc::GammaPoly;
using Real = boost::multiprecision::cpp_bin_float_50;

namespace {

SymExpr sym(Field f, unsigned k = 0, unsigned dR = 0, unsigned dZ = 0) { return SymExpr::profile(f, k, dR, dZ); }
SymExpr tau(Rational a, Rational b) { return SymExpr::tau({std::move(a), std::move(b)}); }
SymExpr radius() { return SymExpr::constant(1) + tau(0, 1) * SymExpr::R(); }

std::string golden_path(const std::string& name) { return std::string(SSBLOW_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Velocities, SingleMode) {
  const Velocities v = build_velocities(AnsatzSpec::single());
  EXPECT_EQ(v.ur, -(radius() * tau(-1, 1) * sym(Field::Psi, 0, 0, 1)));
  EXPECT_EQ(v.uz, SymExpr::constant(2) * tau(-1, 2) * sym(Field::Psi) + radius() * tau(-1, 1) * sym(Field::Psi, 0, 1, 0));
}

TEST(Velocities, ZeroStreamFunction) {
  const Velocities v = velocities_from(SymExpr{});
  EXPECT_TRUE(v.ur.is_zero());
  EXPECT_TRUE(v.uz.is_zero());
}

TEST(Substitute, ZeroAnsatz) {
  const SubstitutedSystem s = substitute(AnsatzFields{}, 1);
  for (const auto& eq : s.equations) EXPECT_TRUE(eq.lhs.is_zero());
}

TEST(Substitute, VorticityForcing) {
  const SubstitutedSystem s = substitute(AnsatzSpec::single());
  // ∂_z(u₁²) moves to the left as −2τ^{−2}U∂_ZU
  const SymExpr forcing = SymExpr::constant(-2) * tau(-2, 0) * sym(Field::U) * sym(Field::U, 0, 0, 1);
  const SymExpr rest = s.equations[1].lhs - forcing;
  for (const auto& t : rest.terms()) {
    EXPECT_FALSE(t.factors.size() == 2 && t.factors[0].field == Field::U && t.factors[1].field == Field::U);
  }
  EXPECT_EQ(sscalc::tau_coefficient(s.equations[1].lhs, {-2, 0}),
            sym(Field::Omega) + SymExpr::constant(GammaPoly::gamma()) * notation::y_dot_grad(Field::Omega) +
                notation::perp_dot_grad(0, Field::Omega) + SymExpr::constant(-2) * sym(Field::U) * sym(Field::U, 0, 0, 1));
}

TEST(Substitute, RejectsShortTruncation) {
  EXPECT_THROW(substitute(AnsatzSpec::generalized(3), 2), std::invalid_argument);
}

TEST(Derive, SingleModeVerdicts) {
  const HierarchyReport r = derive_hierarchy(AnsatzSpec::single(1));
  EXPECT_TRUE(r.acceptable());
  for (const char* id : {"single.order0.u", "single.order0.omega", "single.order0.psi", "single.order1.u",
                         "single.order1.omega"}) {
    ASSERT_NE(r.comparison(id), nullptr) << id;
    EXPECT_EQ(r.comparison(id)->verdict, Verdict::Match) << id;
  }
  const Comparison* psi1 = r.comparison("single.order1.psi");
  ASSERT_NE(psi1, nullptr);
  EXPECT_EQ(psi1->verdict, Verdict::ScalarMultiple);
  EXPECT_EQ(*psi1->scale, Rational(-3));
  EXPECT_EQ(r.find("psi", 0)->lhs, -notation::laplacian(Field::Psi) - sym(Field::Omega));
}

TEST(Derive, PsiOrderOneCoefficientFromResidual) {
  // Ω is left unconstrained; the order-0 part is removed using exact
  // closed-form derivatives, leaving τ^{−1+γ}·c·∂_RΨ + O(τ^{−1+2γ}).
  std::mt19937_64 rng(4);
  oracle::ProfileSet set;
  set.forms[{Field::U, 0}] = oracle::ClosedForm::random(rng);
  set.forms[{Field::Omega, 0}] = oracle::ClosedForm::random(rng);
  set.forms[{Field::Psi, 0}] = oracle::ClosedForm::random(rng);
  const Real gamma = 1, tau = Real("1e-15"), R = Real("-0.3"), Z = Real("0.7");
  const auto res = oracle::physical_residual<Real>(AnsatzSpec::single(), set, gamma, R, Z, tau);
  const auto& psi = set.forms.at({Field::Psi, 0});
  const Real order0 = -(psi.derivative<Real>(2, 0, R, Z) + psi.derivative<Real>(0, 2, R, Z)) -
                      set.forms.at({Field::Omega, 0}).derivative<Real>(0, 0, R, Z);
  const Real coeff = (res[2] - order0 / tau) * pow(tau, 1 - gamma) / psi.derivative<Real>(1, 0, R, Z);
  EXPECT_NEAR(coeff.convert_to<double>(), -3.0, 1e-9);
}

TEST(Derive, GeneralizedOrderOne) {
  const HierarchyReport r = derive_hierarchy(AnsatzSpec::generalized(1));
  EXPECT_TRUE(r.acceptable());
  EXPECT_EQ(r.comparison("generalized.order1.u")->verdict, Verdict::Match);
  EXPECT_EQ(r.comparison("generalized.order1.omega")->verdict, Verdict::Match);
  const SymExpr& u1 = r.find("u", 1)->lhs;
  const SymExpr plus = SymExpr::constant(2) * sym(Field::Psi, 0) * sym(Field::U, 0, 0, 1);
  const SymExpr minus = SymExpr::constant(-2) * sym(Field::U, 0) * sym(Field::Psi, 0, 0, 1);
  for (const SymExpr* t : {&plus, &minus}) {
    EXPECT_NE(std::find(u1.terms().begin(), u1.terms().end(), t->terms()[0]), u1.terms().end());
  }
}

TEST(Derive, GeneralizedPsiDiscrepancyIsReported) {
  const HierarchyReport r = derive_hierarchy(AnsatzSpec::generalized(1));
  const Comparison* c = r.comparison("generalized.order1.psi");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->verdict, Verdict::DocumentedDiscrepancy);
  EXPECT_EQ(c->only_derived, SymExpr::constant(-3) * sym(Field::Psi, 0, 1, 0));
  EXPECT_EQ(c->only_reference, sym(Field::Psi, 0, 1, 0));
  EXPECT_EQ(r.find("psi", 1)->lhs,
            -notation::laplacian(Field::Psi, 1) - SymExpr::constant(3) * sym(Field::Psi, 0, 1, 0) -
                sym(Field::Omega, 1));
}

TEST(Derive, HigherIndexProfilesZeroReproduceSingleMode) {
  const SubstitutedSystem gen = substitute(AnsatzSpec::generalized(1));
  const SubstitutedSystem single = substitute(AnsatzSpec::single(1));
  const sscalc::ProfileSubstitution drop = [](const sscalc::ProfileRef& p) -> std::optional<SymExpr> {
    if (p.k >= 1) return SymExpr{};
    return std::nullopt;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    const auto a = sscalc::collect_orders({sscalc::substitute_profiles(gen.equations[i].lhs, drop), "x"});
    const auto b = sscalc::collect_orders(single.equations[i]);
    EXPECT_EQ(a.base, b.base);
    for (unsigned k = 0; k <= 1; ++k) EXPECT_EQ(a.orders.at(k).lhs, b.orders.at(k).lhs) << i << " " << k;
  }
}

TEST(Induction, FirstIndexCoefficient) {
  const auto sys = induction_system(AnsatzSpec::generalized(1), 1);
  ASSERT_EQ(sys.size(), 3u);
  EXPECT_EQ(sscalc::canonicalize(sys[0].lhs - SymExpr::constant(GammaPoly::affine(1, Rational(-3, 2))) * sym(Field::U, 1) -
                                 SymExpr::constant(GammaPoly::gamma()) * notation::y_dot_grad(Field::U, 1)),
            SymExpr{});
}

TEST(Induction, VorticityCoefficientVanishesAtReciprocal) {
  const auto sys = induction_system(AnsatzSpec::generalized(2), 2, Rational(1, 2));
  for (const auto& t : sys[1].lhs.terms()) {
    const bool bare_omega2 = t.factors.size() == 1 && t.factors[0] == sscalc::ProfileRef{Field::Omega, 2, 0, 0} &&
                             t.r_pow == 0 && t.z_pow == 0;
    EXPECT_FALSE(bare_omega2);
  }
}

TEST(Induction, EllipticEquationForEveryIndex) {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto sys = induction_system(AnsatzSpec::generalized(k), k);
    EXPECT_EQ(sys[2].lhs, -notation::laplacian(Field::Psi, k) - sym(Field::Omega, k)) << k;
  }
}

TEST(Emit, LatexContainsLeadingSwirlTerm) {
  const std::string tex = emit(derive_hierarchy(AnsatzSpec::single(1)), EmitFormat::Latex);
  EXPECT_NE(tex.find("\\left(1-\\frac{\\gamma}{2}\\right) U"), std::string::npos);
}

TEST(Emit, EmptyReport) {
  const HierarchyReport empty;
  const std::string js = emit(empty, EmitFormat::Json);
  EXPECT_EQ(parse_report(js), empty);
  EXPECT_FALSE(emit(empty, EmitFormat::Latex).empty());
}

TEST(Emit, JsonRoundTrip) {
  for (const auto& spec : {AnsatzSpec::single(1), AnsatzSpec::single(2), AnsatzSpec::generalized(2)}) {
    const HierarchyReport r = derive_hierarchy(spec);
    const std::string js = emit(r, EmitFormat::Json);
    EXPECT_EQ(parse_report(js), r);
    EXPECT_EQ(emit(parse_report(js), EmitFormat::Json), js);
  }
}

TEST(Emit, GoldenFiles) {
  EXPECT_EQ(emit(derive_hierarchy(AnsatzSpec::single(1)), EmitFormat::Json) + "\n",
            slurp(golden_path("hierarchy_single_1.json")));
  EXPECT_EQ(emit(derive_hierarchy(AnsatzSpec::generalized(1)), EmitFormat::Latex),
            slurp(golden_path("hierarchy_generalized_1.tex")));
}

TEST(NumericOracle, ResidualMatchesCollectedOrders) {
  std::mt19937_64 rng(17);
  const AnsatzSpec spec = AnsatzSpec::generalized(1);
  const HierarchyReport report = derive_hierarchy(spec);
  oracle::ProfileSet set;
  for (Field f : {Field::U, Field::Omega, Field::Psi}) {
    for (unsigned k = 0; k <= 1; ++k) set.forms[{f, k}] = oracle::ClosedForm::random(rng);
  }
  const Real gamma = 1, R = Real("-0.4"), Z = Real("0.25");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& name = kEquationNames[i];
    const auto* trunc = &*std::find_if(report.truncation.begin(), report.truncation.end(),
                                       [&](const TruncationInfo& t) { return t.equation == name; });
    const Real base = rational_to<Real>(trunc->base.base) + rational_to<Real>(trunc->base.gamma_coeff) * gamma;
    std::vector<double> xs, ys;
    for (int j = 2; j <= 5; ++j) {
      const Real tau = pow(Real(10), -j);
      const Real full = oracle::physical_residual<Real>(spec, set, gamma, R, Z, tau)[i];
      Real recon = 0;
      for (unsigned k = 0; k <= 1; ++k) {
        recon += pow(tau, base + k * gamma) *
                 sscalc::eval_numeric<Real>(report.find(name, k)->lhs, set.bindings<Real>(), R, Z, pow(tau, gamma), gamma);
      }
      xs.push_back(std::log10(std::pow(10.0, -j)));
      ys.push_back(log10(abs(full - recon)).convert_to<double>());
    }
    const double slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
    EXPECT_GE(slope, (base + 2 * gamma).convert_to<double>() - 0.1) << name;
  }
}
