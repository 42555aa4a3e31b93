#include "ssblow/sscalc/calculus.hpp"

#include <algorithm>

#include "ssblow/errors.hpp"

namespace ssblow::sscalc {
namespace {

enum class Axis { R, Z };

SymExpr partial(const SymExpr& e, Axis axis) {
  std::vector<SymTerm> out;
  for (const SymTerm& t : e.terms()) {
    const std::uint32_t pow = axis == Axis::R ? t.r_pow : t.z_pow;
    if (pow > 0) {
      SymTerm d = t;
      d.coeff = GammaPoly(Rational(pow)) * t.coeff;
      (axis == Axis::R ? d.r_pow : d.z_pow) -= 1;
      out.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      // Equal adjacent factors yield identical terms; canonicalize merges them.
      SymTerm d = t;
      d.factors[i] = axis == Axis::R ? t.factors[i].derived_R() : t.factors[i].derived_Z();
      std::sort(d.factors.begin(), d.factors.end());
      out.push_back(std::move(d));
    }
  }
  return canonicalize(std::move(out));
}

const SymExpr& tau_minus_gamma() {
  static const SymExpr t = SymExpr::tau({0, -1});
  return t;
}

}  // namespace

SymExpr partial_R(const SymExpr& e) { return partial(e, Axis::R); }
SymExpr partial_Z(const SymExpr& e) { return partial(e, Axis::Z); }

SymExpr diff_r(const SymExpr& e) { return tau_minus_gamma() * partial_R(e); }
SymExpr diff_z(const SymExpr& e) { return tau_minus_gamma() * partial_Z(e); }

SymExpr diff_t(const SymExpr& e) {
  // Explicit τ-power part: −(a + bγ) τ^{a+bγ−1}.
  std::vector<SymTerm> explicit_part;
  for (const SymTerm& t : e.terms()) {
    if (t.tau.is_zero()) continue;
    SymTerm d = t;
    d.coeff = -t.tau.as_poly() * t.coeff;
    d.tau = t.tau + SsExponent(-1, 0);
    explicit_part.push_back(std::move(d));
  }
  // Implicit part through R and Z: γτ^{−1}(R∂_R + Z∂_Z).
  const SymExpr scaling = SymExpr::R() * partial_R(e) + SymExpr::Z() * partial_Z(e);
  return canonicalize(std::move(explicit_part)) +
         GammaPoly::gamma() * (SymExpr::tau({-1, 0}) * scaling);
}

TruncatedSeries geometric_expand(unsigned order) {
  TruncatedSeries s;
  s.order = order;
  std::vector<SymTerm> terms;
  for (unsigned m = 0; m <= order; ++m) {
    SymTerm t;
    t.coeff = Rational(m % 2 == 0 ? 1 : -1);
    t.r_pow = m;
    t.tau = gamma_multiple(m);
    terms.push_back(std::move(t));
  }
  s.expr = canonicalize(std::move(terms));
  s.remainder = gamma_multiple(order + 1);
  return s;
}

OrderCollection collect_orders(const SymEquation& eq) {
  OrderCollection out;
  const auto& terms = eq.lhs.terms();
  if (terms.empty()) return out;
  Rational base = terms.front().tau.base;
  Rational min_gamma = terms.front().tau.gamma_coeff;
  for (const SymTerm& t : terms) {
    if (t.tau.base != base) {
      throw CommensurabilityError("equation '" + eq.label + "': exponents " + to_string(terms.front().tau) +
                                  " and " + to_string(t.tau) + " differ by a non-multiple of gamma");
    }
    if (t.tau.gamma_coeff < min_gamma) min_gamma = t.tau.gamma_coeff;
  }
  out.base = {base, min_gamma};
  std::map<unsigned, std::vector<SymTerm>> buckets;
  for (const SymTerm& t : terms) {
    const Rational k = t.tau.gamma_coeff - min_gamma;
    if (k.get_den() != 1) {
      throw CommensurabilityError("equation '" + eq.label + "': exponent " + to_string(t.tau) +
                                  " is off the lattice " + to_string(out.base) + " + k*gamma");
    }
    SymTerm stripped = t;
    stripped.tau = SsExponent::zero();
    buckets[static_cast<unsigned>(k.get_num().get_ui())].push_back(std::move(stripped));
  }
  for (auto& [k, bucket] : buckets) {
    out.orders[k] = SymEquation{canonicalize(std::move(bucket)), eq.label + "[" + std::to_string(k) + "]"};
  }
  return out;
}

SymExpr tau_coefficient(const SymExpr& e, const SsExponent& exponent) {
  std::vector<SymTerm> out;
  for (const SymTerm& t : e.terms()) {
    if (t.tau != exponent) continue;
    SymTerm s = t;
    s.tau = SsExponent::zero();
    out.push_back(std::move(s));
  }
  return canonicalize(std::move(out));
}

SymExpr reconstruct(const OrderCollection& collection) {
  SymExpr total;
  for (const auto& [k, eq] : collection.orders) {
    total += SymExpr::tau(collection.base + gamma_multiple(k)) * eq.lhs;
  }
  return total;
}

SymExpr substitute_profiles(const SymExpr& e, const ProfileSubstitution& sub) {
  SymExpr total;
  for (const SymTerm& t : e.terms()) {
    SymTerm kept = t;
    kept.factors.clear();
    SymExpr product;
    bool replaced_any = false;
    for (const ProfileRef& ref : t.factors) {
      if (auto rep = sub(ref)) {
        product = replaced_any ? product * *rep : *rep;
        replaced_any = true;
      } else {
        kept.factors.push_back(ref);
      }
    }
    SymExpr base = SymExpr::from_terms({kept});
    total += replaced_any ? base * product : base;
  }
  return total;
}

SymExpr specialize_gamma(const SymExpr& e, const Rational& gamma) {
  std::vector<SymTerm> out;
  out.reserve(e.size());
  for (const SymTerm& t : e.terms()) {
    SymTerm s = t;
    s.coeff = GammaPoly(t.coeff.eval(gamma));
    out.push_back(std::move(s));
  }
  return canonicalize(std::move(out));
}

unsigned max_derivative_order(const SymExpr& e) {
  unsigned m = 0;
  for (const SymTerm& t : e.terms()) {
    for (const ProfileRef& r : t.factors) m = std::max(m, r.dR + r.dZ);
  }
  return m;
}

}  // namespace ssblow::sscalc
