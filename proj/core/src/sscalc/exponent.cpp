#include "ssblow/sscalc/exponent.hpp"

#include <algorithm>
#include <sstream>

namespace ssblow::sscalc {

GammaPoly::GammaPoly(const Rational& constant) : coeffs_{constant} {
  coeffs_[0].canonicalize();
  trim();
}

GammaPoly::GammaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

GammaPoly GammaPoly::affine(const Rational& c0, const Rational& c1) { return GammaPoly({c0, c1}); }

Rational GammaPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

void GammaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational GammaPoly::eval(const Rational& gamma) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + *it;
  return acc;
}

GammaPoly GammaPoly::operator-() const {
  GammaPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GammaPoly(std::move(c));
}

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  const int c = mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering operator<=>(const SsExponent& a, const SsExponent& b) {
  if (auto c = cmp(a.base, b.base); c != 0) return c;
  return cmp(a.gamma_coeff, b.gamma_coeff);
}

std::string to_string(const GammaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "");
    first = false;
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c == -1) {
        out << "-";
      } else if (c != 1) {
        out << c.get_str() << "*";
      }
      out << "g";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string to_string(const SsExponent& e) { return to_string(e.as_poly()); }

}  // namespace ssblow::sscalc
