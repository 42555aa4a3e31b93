#include "ssblow/sscalc/expr.hpp"

#include <algorithm>

namespace ssblow::sscalc {

bool SymTerm::same_monomial(const SymTerm& o) const {
  return r_pow == o.r_pow && z_pow == o.z_pow && factors == o.factors && tau == o.tau;
}

std::strong_ordering compare_monomials(const SymTerm& a, const SymTerm& b) {
  if (auto c = a.factors.size() <=> b.factors.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(),
                                                      b.factors.begin(), b.factors.end());
      c != 0) {
    return c;
  }
  if (auto c = a.r_pow <=> b.r_pow; c != 0) return c;
  if (auto c = a.z_pow <=> b.z_pow; c != 0) return c;
  return a.tau <=> b.tau;
}

SymExpr canonicalize(std::vector<SymTerm> terms) {
  for (auto& t : terms) std::sort(t.factors.begin(), t.factors.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SymTerm& a, const SymTerm& b) { return compare_monomials(a, b) < 0; });
  std::vector<SymTerm> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().same_monomial(t)) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  return SymExpr::from_terms(std::move(merged));
}

SymExpr canonicalize(const SymExpr& e) { return canonicalize(e.terms()); }

SymExpr SymExpr::from_terms(std::vector<SymTerm> terms) {
  // Fast path: callers inside this file hand over already-merged lists.
  const bool ordered = std::adjacent_find(terms.begin(), terms.end(), [](const SymTerm& a, const SymTerm& b) {
                         return compare_monomials(a, b) >= 0;
                       }) == terms.end();
  const bool nonzero = std::none_of(terms.begin(), terms.end(), [](const SymTerm& t) { return t.coeff.is_zero(); });
  const bool sorted_factors = std::all_of(terms.begin(), terms.end(), [](const SymTerm& t) {
    return std::is_sorted(t.factors.begin(), t.factors.end());
  });
  if (ordered && nonzero && sorted_factors) {
    SymExpr e;
    e.terms_ = std::move(terms);
    return e;
  }
  return canonicalize(std::move(terms));
}

SymExpr SymExpr::constant(const GammaPoly& c) {
  SymTerm t;
  t.coeff = c;
  return from_terms({t});
}

SymExpr SymExpr::profile(const ProfileRef& ref) {
  SymTerm t;
  t.coeff = 1;
  t.factors = {ref};
  return from_terms({t});
}

SymExpr SymExpr::R(std::uint32_t power) {
  SymTerm t;
  t.coeff = 1;
  t.r_pow = power;
  return from_terms({t});
}

SymExpr SymExpr::Z(std::uint32_t power) {
  SymTerm t;
  t.coeff = 1;
  t.z_pow = power;
  return from_terms({t});
}

SymExpr SymExpr::tau(const SsExponent& e) {
  SymTerm t;
  t.coeff = 1;
  t.tau = e;
  return from_terms({t});
}

SymExpr SymExpr::operator-() const {
  SymExpr out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges two canonical term lists, scaling the second by `sign`.
std::vector<SymTerm> merge_sorted(const std::vector<SymTerm>& a, const std::vector<SymTerm>& b, int sign) {
  std::vector<SymTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push_b = [&](const SymTerm& t) {
    out.push_back(t);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  };
  while (i < a.size() && j < b.size()) {
    const auto c = compare_monomials(a[i], b[j]);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      push_b(b[j++]);
    } else {
      SymTerm t = a[i++];
      if (sign < 0) {
        t.coeff -= b[j++].coeff;
      } else {
        t.coeff += b[j++].coeff;
      }
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) push_b(b[j]);
  return out;
}

}  // namespace

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  terms_ = merge_sorted(terms_, o.terms_, +1);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  terms_ = merge_sorted(terms_, o.terms_, -1);
  return *this;
}

SymExpr& SymExpr::operator*=(const SymExpr& o) {
  *this = *this * o;
  return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  std::vector<SymTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      SymTerm t;
      t.coeff = x.coeff * y.coeff;
      t.r_pow = x.r_pow + y.r_pow;
      t.z_pow = x.z_pow + y.z_pow;
      t.factors.resize(x.factors.size() + y.factors.size());
      std::merge(x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(), t.factors.begin());
      t.tau = x.tau + y.tau;
      out.push_back(std::move(t));
    }
  }
  return canonicalize(std::move(out));
}

SymExpr operator*(const GammaPoly& c, const SymExpr& e) {
  if (c.is_zero()) return {};
  SymExpr out = e;
  for (auto& t : out.terms_) t.coeff = c * t.coeff;
  return out;
}

}  // namespace ssblow::sscalc
