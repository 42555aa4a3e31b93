#include "ssblow/sscalc/serialize.hpp"

#include <sstream>

#include "ssblow/errors.hpp"

namespace ssblow::sscalc {

using nlohmann::json;

std::string_view field_name(Field f) {
  switch (f) {
    case Field::U:
      return "U";
    case Field::Omega:
      return "Omega";
    case Field::Psi:
      return "Psi";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "U") return Field::U;
  if (name == "Omega") return Field::Omega;
  if (name == "Psi") return Field::Psi;
  throw ParseError("unknown profile field '" + std::string(name) + "'");
}

json to_json(const GammaPoly& p) {
  json j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.get_str());
  return j;
}

json to_json(const SsExponent& e) { return {{"base", e.base.get_str()}, {"gamma", e.gamma_coeff.get_str()}}; }

json to_json(const ProfileRef& r) {
  return {{"f", std::string(field_name(r.field))}, {"k", r.k}, {"dR", r.dR}, {"dZ", r.dZ}};
}

json to_json(const SymExpr& e) {
  json terms = json::array();
  for (const SymTerm& t : e.terms()) {
    json factors = json::array();
    for (const auto& f : t.factors) factors.push_back(to_json(f));
    terms.push_back({{"coeff", to_json(t.coeff)},
                     {"R", t.r_pow},
                     {"Z", t.z_pow},
                     {"factors", std::move(factors)},
                     {"tau", to_json(t.tau)}});
  }
  return {{"terms", std::move(terms)}};
}

json to_json(const SymEquation& eq) { return {{"label", eq.label}, {"lhs", to_json(eq.lhs)}}; }

GammaPoly gamma_poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("coefficient must be an array of rational strings");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
  return GammaPoly(std::move(c));
}

SsExponent exponent_from_json(const json& j) {
  return {parse_rational(j.at("base").get<std::string>()), parse_rational(j.at("gamma").get<std::string>())};
}

ProfileRef profile_from_json(const json& j) {
  return {parse_field(j.at("f").get<std::string>()), j.at("k").get<std::uint32_t>(),
          j.at("dR").get<std::uint32_t>(), j.at("dZ").get<std::uint32_t>()};
}

SymExpr expr_from_json(const json& j) {
  std::vector<SymTerm> terms;
  for (const auto& tj : j.at("terms")) {
    SymTerm t;
    t.coeff = gamma_poly_from_json(tj.at("coeff"));
    t.r_pow = tj.at("R").get<std::uint32_t>();
    t.z_pow = tj.at("Z").get<std::uint32_t>();
    for (const auto& f : tj.at("factors")) t.factors.push_back(profile_from_json(f));
    t.tau = exponent_from_json(tj.at("tau"));
    terms.push_back(std::move(t));
  }
  return canonicalize(std::move(terms));
}

SymEquation equation_from_json(const json& j) {
  return {expr_from_json(j.at("lhs")), j.at("label").get<std::string>()};
}

namespace {

// |c| * γ^power without sign, e.g. "\frac{3\gamma}{2}".
std::string latex_monomial(const Rational& magnitude, int power) {
  std::string g;
  if (power == 1) g = "\\gamma";
  if (power > 1) g = "\\gamma^{" + std::to_string(power) + "}";
  const std::string num = magnitude.get_num().get_str();
  const std::string den = magnitude.get_den().get_str();
  if (power == 0) return den == "1" ? num : "\\frac{" + num + "}{" + den + "}";
  const std::string top = num == "1" ? g : num + g;
  return den == "1" ? top : "\\frac{" + top + "}{" + den + "}";
}

std::string latex_factor(const ProfileRef& r, bool show_index) {
  std::string out;
  auto deriv = [&](const char* axis, std::uint32_t n) {
    if (n == 0) return;
    out += std::string("\\partial_") + axis;
    if (n > 1) out += "^{" + std::to_string(n) + "}";
    out += " ";
  };
  deriv("R", r.dR);
  deriv("Z", r.dZ);
  switch (r.field) {
    case Field::U:
      out += "U";
      break;
    case Field::Omega:
      out += "\\Omega";
      break;
    case Field::Psi:
      out += "\\Psi";
      break;
  }
  if (show_index || r.k != 0) out += "_{" + std::to_string(r.k) + "}";
  return out;
}

}  // namespace

std::string to_latex(const GammaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    out += latex_monomial(neg ? Rational(-c) : c, static_cast<int>(i));
  }
  return out;
}

std::string to_latex(const SsExponent& e) { return to_latex(e.as_poly()); }

std::string to_latex(const SymExpr& e, bool show_index) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const SymTerm& t : e.terms()) {
    std::vector<std::string> parts;
    if (t.r_pow > 0) parts.push_back(t.r_pow == 1 ? "R" : "R^{" + std::to_string(t.r_pow) + "}");
    if (t.z_pow > 0) parts.push_back(t.z_pow == 1 ? "Z" : "Z^{" + std::to_string(t.z_pow) + "}");
    for (std::size_t i = 0; i < t.factors.size();) {
      std::size_t n = 1;
      while (i + n < t.factors.size() && t.factors[i + n] == t.factors[i]) ++n;
      std::string f = latex_factor(t.factors[i], show_index);
      if (n > 1) f = (t.factors[i].is_derivative() ? "\\left(" + f + "\\right)" : f) + "^{" + std::to_string(n) + "}";
      parts.push_back(std::move(f));
      i += n;
    }
    if (!t.tau.is_zero()) parts.push_back("\\tau^{" + to_latex(t.tau) + "}");

    bool neg = false;
    std::string coeff;
    const auto& c = t.coeff.coeffs();
    const bool single = std::count_if(c.begin(), c.end(), [](const Rational& q) { return q != 0; }) == 1;
    if (single) {
      std::size_t power = 0;
      while (c[power] == 0) ++power;
      neg = c[power] < 0;
      const Rational mag = neg ? Rational(-c[power]) : c[power];
      if (!(power == 0 && mag == 1 && !parts.empty())) coeff = latex_monomial(mag, static_cast<int>(power));
    } else {
      coeff = "\\left(" + to_latex(t.coeff) + "\\right)";
    }
    std::string body = coeff;
    for (const auto& p : parts) body += (body.empty() ? "" : " ") + p;
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string to_latex(const SymEquation& eq, bool show_index) { return to_latex(eq.lhs, show_index) + " = 0"; }

std::string to_text(const SymExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const SymTerm& t : e.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(t.coeff) << ")";
    if (t.r_pow) out << "*R^" << t.r_pow;
    if (t.z_pow) out << "*Z^" << t.z_pow;
    for (const auto& f : t.factors) {
      out << "*" << field_name(f.field) << f.k;
      if (f.dR || f.dZ) out << "_";
      for (std::uint32_t i = 0; i < f.dR; ++i) out << "R";
      for (std::uint32_t i = 0; i < f.dZ; ++i) out << "Z";
    }
    if (!t.tau.is_zero()) out << "*tau^(" << to_string(t.tau) << ")";
  }
  return out.str();
}

}  // namespace ssblow::sscalc
