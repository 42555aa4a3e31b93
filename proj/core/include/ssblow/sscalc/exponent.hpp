#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "ssblow/rational.hpp"

namespace ssblow::sscalc {

/// Polynomial in the symbolic scaling exponent γ with exact rational
/// coefficients. Coefficient i multiplies γ^i; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
class GammaPoly {
 public:
  GammaPoly() = default;
  GammaPoly(const Rational& constant);  // NOLINT: implicit scalar promotion
  GammaPoly(int constant) : GammaPoly(Rational(constant)) {}  // NOLINT
  explicit GammaPoly(std::vector<Rational> coeffs);

  /// c0 + c1*γ
  static GammaPoly affine(const Rational& c0, const Rational& c1);
  static GammaPoly gamma() { return affine(0, 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of γ^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational eval(const Rational& gamma) const;
  template <class T>
  T eval_as(const T& gamma) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + rational_to<T>(*it);
    return acc;
  }

  GammaPoly operator-() const;
  GammaPoly& operator+=(const GammaPoly& o);
  GammaPoly& operator-=(const GammaPoly& o);
  friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
  friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
  friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b);
  friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exponent base + gamma_coeff*γ of τ = T − t.
struct SsExponent {
  Rational base;
  Rational gamma_coeff;

  SsExponent() = default;
  SsExponent(Rational b, Rational g) : base(std::move(b)), gamma_coeff(std::move(g)) {
    base.canonicalize();
    gamma_coeff.canonicalize();
  }

  static SsExponent zero() { return {}; }
  bool is_zero() const { return base == 0 && gamma_coeff == 0; }
  /// The exponent as an affine polynomial in γ.
  GammaPoly as_poly() const { return GammaPoly::affine(base, gamma_coeff); }

  SsExponent operator-() const { return {-base, -gamma_coeff}; }
  friend SsExponent operator+(const SsExponent& a, const SsExponent& b) {
    return {a.base + b.base, a.gamma_coeff + b.gamma_coeff};
  }
  friend SsExponent operator-(const SsExponent& a, const SsExponent& b) {
    return {a.base - b.base, a.gamma_coeff - b.gamma_coeff};
  }
  friend bool operator==(const SsExponent& a, const SsExponent& b) {
    return a.base == b.base && a.gamma_coeff == b.gamma_coeff;
  }
  friend std::strong_ordering operator<=>(const SsExponent& a, const SsExponent& b);
};

/// τ^{kγ} as an exponent.
inline SsExponent gamma_multiple(const Rational& k) { return {0, k}; }

std::string to_string(const GammaPoly& p);
std::string to_string(const SsExponent& e);

}  // namespace ssblow::sscalc
