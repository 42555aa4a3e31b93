#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "profiles.hpp"
#include "random_expr.hpp"
#include "ssblow/errors.hpp"
#include "ssblow/hierarchy/report.hpp"
#include "ssblow/sscalc/calculus.hpp"
#include "ssblow/sscalc/eval.hpp"
#include "ssblow/sscalc/serialize.hpp"

using namespace ssblow;
using namespace ssblow::sscalc;

namespace {

const GammaPoly g = GammaPoly::gamma();
SymExpr U() { return SymExpr::profile(Field::U); }
SymExpr W() { return SymExpr::profile(Field::Omega); }
SymExpr P() { return SymExpr::profile(Field::Psi); }
SymExpr tau(Rational a, Rational b) { return SymExpr::tau({std::move(a), std::move(b)}); }
SymExpr c(const GammaPoly& p) { return SymExpr::constant(p); }

}  // namespace

TEST(Canonicalize, MergesLikeTerms) {
  const SymExpr e = SymExpr::R() * U() + SymExpr::R() * U();
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.terms()[0].coeff, GammaPoly(2));
  EXPECT_EQ(e.terms()[0].r_pow, 1u);
}

TEST(Canonicalize, Cancels) { EXPECT_TRUE((U() - U()).is_zero()); }

TEST(Canonicalize, MultisetBookkeeping) {
  const SymExpr t = tau(-1, 0) * W();
  const SymExpr e = t + t - t;
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e, t);
  EXPECT_EQ(e.terms()[0].coeff, GammaPoly(1));
}

TEST(Canonicalize, IdempotentOnRawTermLists) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<SymTerm> raw;
    for (int j = 0; j < 3; ++j) {
      const SymExpr e = oracle::random_expr(rng);
      raw.insert(raw.end(), e.terms().begin(), e.terms().end());
      raw.insert(raw.end(), e.terms().rbegin(), e.terms().rend());
    }
    const SymExpr once = canonicalize(raw);
    EXPECT_EQ(canonicalize(once), once);
    for (std::size_t k = 1; k < once.size(); ++k) {
      EXPECT_EQ(compare_monomials(once.terms()[k - 1], once.terms()[k]), std::strong_ordering::less);
    }
    for (const SymTerm& t : once.terms()) EXPECT_FALSE(t.coeff.is_zero());
  }
}

TEST(RingAxioms, RandomizedIdentities) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const SymExpr a = oracle::random_expr(rng), b = oracle::random_expr(rng), cc = oracle::random_expr(rng);
    EXPECT_EQ((a + b) + cc, a + (b + cc));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * cc, a * (b * cc));
    EXPECT_EQ(a * (b + cc), a * b + a * cc);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * SymExpr::constant(1), a);
  }
}

TEST(DiffT, SwirlLeadingTerm) {
  const SymExpr got = diff_t(tau(-1, Rational(1, 2)) * U());
  const SymExpr t = tau(-2, Rational(1, 2));
  const SymExpr want = c(GammaPoly::affine(1, Rational(-1, 2))) * t * U() +
                       c(g) * t * (SymExpr::R() * SymExpr::profile(Field::U, 0, 1, 0) +
                                   SymExpr::Z() * SymExpr::profile(Field::U, 0, 0, 1));
  EXPECT_EQ(got, want);
}

TEST(DiffT, VorticityLeadingTerm) {
  const SymExpr got = diff_t(tau(-1, 0) * W());
  const SymExpr t = tau(-2, 0);
  const SymExpr want = t * W() + c(g) * t *
                                     (SymExpr::R() * SymExpr::profile(Field::Omega, 0, 1, 0) +
                                      SymExpr::Z() * SymExpr::profile(Field::Omega, 0, 0, 1));
  EXPECT_EQ(got, want);
}

TEST(DiffT, ConstantVanishes) { EXPECT_TRUE(diff_t(SymExpr::constant(Rational(7, 3))).is_zero()); }

TEST(DiffSpace, StreamFunctionZ) {
  EXPECT_EQ(diff_z(tau(-1, 2) * P()), tau(-1, 1) * SymExpr::profile(Field::Psi, 0, 0, 1));
}

TEST(DiffSpace, PowerRule) { EXPECT_EQ(diff_r(SymExpr::R(2)), c(2) * tau(0, -1) * SymExpr::R()); }

TEST(DiffSpace, MixedPartialsCommute) {
  EXPECT_EQ(diff_z(diff_r(P())), diff_r(diff_z(P())));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const SymExpr e = oracle::random_expr(rng);
    EXPECT_EQ(diff_z(diff_r(e)), diff_r(diff_z(e)));
  }
}

TEST(Leibniz, AllThreeDerivatives) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 150; ++i) {
    const SymExpr a = oracle::random_expr(rng, 3), b = oracle::random_expr(rng, 3);
    EXPECT_EQ(diff_r(a * b), diff_r(a) * b + a * diff_r(b));
    EXPECT_EQ(diff_z(a * b), diff_z(a) * b + a * diff_z(b));
    EXPECT_EQ(diff_t(a * b), diff_t(a) * b + a * diff_t(b));
  }
}

TEST(GeometricExpand, LowOrders) {
  EXPECT_EQ(geometric_expand(0).expr, SymExpr::constant(1));
  const SymExpr want = SymExpr::constant(1) - SymExpr::R() * tau(0, 1) + SymExpr::R(2) * tau(0, 2);
  const TruncatedSeries s = geometric_expand(2);
  EXPECT_EQ(s.expr, want);
  EXPECT_EQ(s.remainder, SsExponent(0, 3));
}

TEST(GeometricExpand, TruncationBound) {
  const TruncatedSeries s = geometric_expand(4);
  const double tg = 0.1, R = -0.5;
  const ProfileBindings<double> none = [](const ProfileRef&, const double&, const double&) {
    return std::optional<double>();
  };
  const double approx = eval_numeric<double>(s.expr, none, R, 0.0, tg, 1.0);
  const double exact = 1.0 / (1.0 + tg * R);
  // with R < 0 every dropped term is positive, so the bound is attained
  EXPECT_LE(std::abs(approx - exact), std::pow(0.05, 5) / (1 - 0.05) * (1 + 1e-9));
}

TEST(CollectOrders, ZeroInput) {
  const OrderCollection oc = collect_orders(SymEquation{SymExpr{}, "zero"});
  EXPECT_TRUE(oc.orders.empty());
}

TEST(CollectOrders, OffLatticeExponentIsAnError) {
  const SymExpr e = tau(-1, 0) * U() + tau(-1, Rational(1, 2)) * W();
  EXPECT_THROW(collect_orders(SymEquation{e, "bad"}), CommensurabilityError);
  const SymExpr f = tau(-1, 0) * U() + tau(Rational(-1, 2), 0) * W();
  EXPECT_THROW(collect_orders(SymEquation{f, "bad"}), CommensurabilityError);
}

TEST(CollectOrders, ReconstructsExactly) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    std::vector<SymTerm> terms = oracle::random_expr(rng, 6).terms();
    std::uniform_int_distribution<int> kk(0, 3);
    for (SymTerm& t : terms) t.tau = SsExponent(-2, Rational(1, 2) + kk(rng));
    const SymExpr lattice = canonicalize(terms);
    if (lattice.is_zero()) continue;
    const OrderCollection oc = collect_orders(SymEquation{lattice, "x"});
    EXPECT_EQ(reconstruct(oc), lattice);
    for (const auto& [k, eq] : oc.orders) {
      for (const SymTerm& t : eq.lhs.terms()) EXPECT_TRUE(t.tau.is_zero());
    }
  }
}

TEST(CollectOrders, SingleModeSwirlEquation) {
  const auto sys = hierarchy::substitute(hierarchy::AnsatzSpec::single(1));
  const OrderCollection oc = collect_orders(sys.equations[0]);
  EXPECT_EQ(oc.base, SsExponent(-2, Rational(1, 2)));
  const SymExpr Ur = SymExpr::profile(Field::U, 0, 1, 0), Uz = SymExpr::profile(Field::U, 0, 0, 1);
  const SymExpr Pr = SymExpr::profile(Field::Psi, 0, 1, 0), Pz = SymExpr::profile(Field::Psi, 0, 0, 1);
  const SymExpr perp = -(Pz * Ur) + Pr * Uz;
  const SymExpr order0 = c(GammaPoly::affine(1, Rational(-1, 2))) * U() +
                         c(g) * (SymExpr::R() * Ur + SymExpr::Z() * Uz) + perp;
  const SymExpr order1 = SymExpr::R() * perp + c(2) * P() * Uz - c(2) * U() * Pz;
  EXPECT_EQ(oc.orders.at(0).lhs, order0);
  EXPECT_EQ(oc.orders.at(1).lhs, order1);
}

TEST(EvalNumeric, SimpleProduct) {
  const ProfileBindings<double> one = [](const ProfileRef& r, const double&, const double&) {
    return std::optional<double>(r.dR + r.dZ == 0 ? 1.0 : 0.0);
  };
  EXPECT_DOUBLE_EQ(eval_numeric<double>(c(2) * SymExpr::R() * U(), one, -1.0, 0.0, 0.5, 1.0), -2.0);
}

TEST(EvalNumeric, OrderZeroSwirlAtGammaTwo) {
  const auto sys = hierarchy::substitute(hierarchy::AnsatzSpec::single(1));
  const SymExpr order0 = collect_orders(sys.equations[0]).orders.at(0).lhs;
  oracle::ProfileSet set;
  set.forms[{Field::U, 0}] = oracle::ClosedForm({{1.0, -1.0, 1.0, 0.0, true}});
  set.zero_missing = true;
  const double v = eval_numeric<double>(order0, set.bindings<double>(), -1.0, 1.0, 0.1, 2.0);
  EXPECT_NEAR(v, 4 * std::exp(2.0), 1e-12);
}

TEST(EvalNumeric, MissingBindingThrows) {
  const ProfileBindings<double> none = [](const ProfileRef&, const double&, const double&) {
    return std::optional<double>();
  };
  EXPECT_THROW(eval_numeric<double>(U(), none, 0.0, 0.0, 0.5, 1.0), MissingBinding);
}

TEST(EvalNumeric, MatchesFiniteDifferencesInZ) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pt(-1.0, 0.0), zz(-1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    oracle::ProfileSet set;
    for (Field f : {Field::U, Field::Omega, Field::Psi}) {
      for (unsigned k : {0u, 1u}) set.forms[{f, k}] = oracle::ClosedForm::random(rng);
    }
    const auto bind = set.bindings<double>();
    const SymExpr e = oracle::random_expr(rng, 4);
    const double gamma = 1.5, tg = 0.5;
    const double scale = std::pow(tg, -1.0);  // Z = z·τ^{-γ}
    const double R = pt(rng), Z = zz(rng), h = 1e-4;
    const double exact = eval_numeric<double>(diff_z(e), bind, R, Z, tg, gamma);
    const double fd = (eval_numeric<double>(e, bind, R, Z + h * scale, tg, gamma) -
                       eval_numeric<double>(e, bind, R, Z - h * scale, tg, gamma)) /
                      (2 * h);
    EXPECT_LE(std::abs(exact - fd), 1e-6 * std::max(1.0, std::abs(exact))) << to_text(e);
  }
}

TEST(Serialize, JsonRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const SymExpr e = oracle::random_expr(rng);
    EXPECT_EQ(expr_from_json(to_json(e)), e);
    const SymEquation eq{e, "lbl"};
    EXPECT_EQ(equation_from_json(nlohmann::json::parse(to_json(eq).dump())), eq);
  }
}

TEST(Serialize, JsonShape) {
  const nlohmann::json j = to_json(SymExpr::profile(Field::U, 0, 1, 0));
  EXPECT_EQ(j.dump(), to_json(SymExpr::profile(Field::U, 0, 1, 0)).dump());
  const nlohmann::json r = to_json(ProfileRef{Field::U, 0, 1, 0});
  EXPECT_EQ(r, nlohmann::json::parse(R"({"f":"U","k":0,"dR":1,"dZ":0})"));
  EXPECT_EQ(to_json(SsExponent(-2, Rational(1, 2))), nlohmann::json::parse(R"({"base":"-2","gamma":"1/2"})"));
  EXPECT_EQ(to_json(GammaPoly::affine(1, Rational(-1, 2))), nlohmann::json::parse(R"(["1","-1/2"])"));
}

TEST(Serialize, Latex) {
  const std::string s = to_latex(c(GammaPoly::affine(1, Rational(-1, 2))) * U());
  EXPECT_NE(s.find("\\left(1-\\frac{\\gamma}{2}\\right) U"), std::string::npos) << s;
  EXPECT_NE(to_latex(SymExpr::profile(Field::Omega, 0, 0, 1)).find("\\partial_Z \\Omega"), std::string::npos);
}

TEST(Concurrency, ThreadCountDoesNotChangeOutput) {
  const std::string serial = hierarchy::emit(hierarchy::derive_hierarchy(hierarchy::AnsatzSpec::generalized(2)),
                                             hierarchy::EmitFormat::Json);
  std::vector<std::string> out(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < out.size(); ++i) {
    pool.emplace_back([&out, i] {
      out[i] = hierarchy::emit(hierarchy::derive_hierarchy(hierarchy::AnsatzSpec::generalized(2)),
                               hierarchy::EmitFormat::Json);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& s : out) EXPECT_EQ(s, serial);
}
