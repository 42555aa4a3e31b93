#pragma once

#include <algorithm>
#include <random>

#include "ssblow/sscalc/expr.hpp"

namespace ssblow::oracle {

/// Small random expressions over a handful of symbols, exponents on a
/// common lattice so products stay collectable.
inline sscalc::SymExpr random_expr(std::mt19937_64& rng, int max_terms = 4) {
  using namespace sscalc;
  std::uniform_int_distribution<int> nterms(0, max_terms), small(0, 2), num(-4, 4), den(1, 3),
      field(0, 2), nfac(0, 2);
  std::vector<SymTerm> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    SymTerm t;
    t.coeff = GammaPoly(std::vector<Rational>{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    t.r_pow = small(rng);
    t.z_pow = small(rng);
    const int f = nfac(rng);
    for (int j = 0; j < f; ++j) {
      t.factors.push_back(ProfileRef{static_cast<Field>(field(rng)), static_cast<std::uint32_t>(small(rng) / 2),
                                     static_cast<std::uint32_t>(small(rng)), static_cast<std::uint32_t>(small(rng))});
    }
    std::sort(t.factors.begin(), t.factors.end());
    t.tau = SsExponent(Rational(-small(rng)), Rational(small(rng), 2));
    terms.push_back(std::move(t));
  }
  return SymExpr::from_terms(std::move(terms));
}

}  // namespace ssblow::oracle
