#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssblow/sscalc/exponent.hpp"
#include "ssblow/sscalc/profile.hpp"

namespace ssblow::sscalc {

/// coeff(γ) · R^r_pow · Z^z_pow · Π factors · τ^tau.
/// The coefficient is a polynomial in γ so that factors such as (1 − γ/2)
/// produced by time differentiation stay exact and symbolic.
struct SymTerm {
  GammaPoly coeff;
  std::uint32_t r_pow = 0;
  std::uint32_t z_pow = 0;
  std::vector<ProfileRef> factors;  // sorted
  SsExponent tau;

  /// True when everything except the coefficient agrees.
  bool same_monomial(const SymTerm& o) const;
  friend bool operator==(const SymTerm&, const SymTerm&) = default;
};

/// Fixed total order on monomials: factor count, then factors
/// lexicographically by (field, k, dR, dZ), then (r_pow, z_pow), then tau.
std::strong_ordering compare_monomials(const SymTerm& a, const SymTerm& b);

/// A sum of terms, always held in canonical form: like monomials merged,
/// zero coefficients dropped, terms sorted by compare_monomials.
class SymExpr {
 public:
  SymExpr() = default;

  static SymExpr constant(const GammaPoly& c);
  static SymExpr profile(const ProfileRef& ref);
  static SymExpr profile(Field f, std::uint32_t k = 0, std::uint32_t dR = 0, std::uint32_t dZ = 0) {
    return profile(ProfileRef{f, k, dR, dZ});
  }
  static SymExpr R(std::uint32_t power = 1);
  static SymExpr Z(std::uint32_t power = 1);
  static SymExpr tau(const SsExponent& e);
  /// Canonicalizes an arbitrary term list.
  static SymExpr from_terms(std::vector<SymTerm> terms);

  const std::vector<SymTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  SymExpr operator-() const;
  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  SymExpr& operator*=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator*(const GammaPoly& c, const SymExpr& e);
  friend bool operator==(const SymExpr& a, const SymExpr& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<SymTerm> terms_;
};

/// Re-canonicalizes; the identity on anything built through SymExpr.
SymExpr canonicalize(const SymExpr& e);
SymExpr canonicalize(std::vector<SymTerm> terms);

/// Equation lhs = 0.
struct SymEquation {
  SymExpr lhs;
  std::string label;
  friend bool operator==(const SymEquation&, const SymEquation&) = default;
};

}  // namespace ssblow::sscalc
