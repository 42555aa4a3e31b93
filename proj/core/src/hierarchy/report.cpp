#include "ssblow/hierarchy/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "ssblow/errors.hpp"
#include "ssblow/sscalc/serialize.hpp"

namespace ssblow::hierarchy {

using nlohmann::json;
using sscalc::Field;
using sscalc::SymTerm;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::ScalarMultiple:
      return "scalar_multiple";
    case Verdict::DocumentedDiscrepancy:
      return "documented_discrepancy";
    case Verdict::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::Match, Verdict::ScalarMultiple, Verdict::DocumentedDiscrepancy, Verdict::Mismatch}) {
    if (verdict_name(v) == name) return v;
  }
  throw ParseError("unknown verdict '" + std::string(name) + "'");
}

namespace {

// Terms of `a` that do not appear verbatim (monomial and coefficient) in `b`.
SymExpr terms_not_in(const SymExpr& a, const SymExpr& b) {
  std::vector<SymTerm> out;
  for (const SymTerm& t : a.terms()) {
    if (std::find(b.terms().begin(), b.terms().end(), t) == b.terms().end()) out.push_back(t);
  }
  return SymExpr::from_terms(std::move(out));
}

std::optional<Rational> scalar_ratio(const SymExpr& derived, const SymExpr& reference) {
  if (derived.size() != reference.size() || derived.is_zero()) return std::nullopt;
  const auto& d0 = derived.terms().front().coeff;
  const auto& r0 = reference.terms().front().coeff;
  if (d0.degree() != r0.degree()) return std::nullopt;
  const Rational scale = d0.coeffs().back() / r0.coeffs().back();
  for (std::size_t i = 0; i < derived.size(); ++i) {
    const SymTerm& d = derived.terms()[i];
    const SymTerm& r = reference.terms()[i];
    if (!d.same_monomial(r) || !(d.coeff == sscalc::GammaPoly(scale) * r.coeff)) return std::nullopt;
  }
  return scale;
}

}  // namespace

Comparison compare(const SymExpr& derived, const ReferenceEquation& reference) {
  Comparison c;
  c.reference = reference.id;
  c.equation = reference.equation;
  c.order = reference.order;
  c.note = reference.note;
  if (derived == reference.lhs) {
    c.verdict = Verdict::Match;
    return c;
  }
  c.only_derived = terms_not_in(derived, reference.lhs);
  c.only_reference = terms_not_in(reference.lhs, derived);
  if (auto s = scalar_ratio(derived, reference.lhs)) {
    c.verdict = Verdict::ScalarMultiple;
    c.scale = *s;
    return c;
  }
  c.verdict = reference.known_discrepancy ? Verdict::DocumentedDiscrepancy : Verdict::Mismatch;
  return c;
}

bool HierarchyReport::acceptable() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const Comparison& c) { return c.verdict != Verdict::Mismatch; });
}

const OrderedEquation* HierarchyReport::find(std::string_view equation, unsigned order) const {
  for (const auto& e : orders) {
    if (e.equation == equation && e.order == order) return &e;
  }
  return nullptr;
}

const Comparison* HierarchyReport::comparison(std::string_view reference_id) const {
  for (const auto& c : comparisons) {
    if (c.reference == reference_id) return &c;
  }
  return nullptr;
}

std::vector<SymEquation> induction_system(const AnsatzSpec& a, unsigned k, const std::optional<Rational>& gamma) {
  if (k < 1) throw std::invalid_argument("induction_system needs k >= 1");
  AnsatzSpec g = a;
  g.mode = AnsatzMode::Generalized;
  g.depth = std::max(a.depth, k);
  const SubstitutedSystem sys = substitute(g, g.depth);

  // U_j = Ω_j = 0 and Ψ_j constant for every j < k.
  const sscalc::ProfileSubstitution hypothesis = [k](const sscalc::ProfileRef& r) -> std::optional<SymExpr> {
    if (r.k >= k) return std::nullopt;
    if (r.field != Field::Psi || r.is_derivative()) return SymExpr{};
    return std::nullopt;
  };

  std::vector<SymEquation> out;
  for (const SymEquation& eq : sys.equations) {
    const SsExponent target = sscalc::collect_orders(eq).base + sscalc::gamma_multiple(k);
    SymExpr lhs = sscalc::tau_coefficient(sscalc::substitute_profiles(eq.lhs, hypothesis), target);
    if (gamma) lhs = sscalc::specialize_gamma(lhs, *gamma);
    out.push_back({std::move(lhs), eq.label + "_" + std::to_string(k)});
  }
  return out;
}

HierarchyReport derive_hierarchy(const AnsatzSpec& a) {
  a.validate();
  HierarchyReport report;
  report.mode = a.mode;
  report.depth = a.depth;
  report.geometric_order = a.depth;
  const SubstitutedSystem sys = substitute(a, report.geometric_order);

  for (const SymEquation& eq : sys.equations) {
    const sscalc::OrderCollection col = sscalc::collect_orders(eq);
    for (unsigned k = 0; k <= a.depth; ++k) {
      auto it = col.orders.find(k);
      report.orders.push_back({eq.label, k, it == col.orders.end() ? SymExpr{} : it->second.lhs});
    }
    TruncationInfo info{eq.label, col.base, std::nullopt};
    if (a.mode == AnsatzMode::Generalized) {
      info.complete_through = a.depth;
    } else if (eq.label == "psi") {
      info.complete_through = report.geometric_order + 1;
    }
    report.truncation.push_back(std::move(info));
  }

  for (const ReferenceEquation& ref : reference_equations(a.mode)) {
    if (const OrderedEquation* derived = report.find(ref.equation, ref.order)) {
      report.comparisons.push_back(compare(derived->lhs, ref));
    }
  }

  if (a.mode == AnsatzMode::Single) {
    const auto refs = substituted_references(report.geometric_order);
    for (std::size_t i = 0; i < refs.size(); ++i) {
      report.comparisons.push_back(compare(sys.equations[i].lhs, refs[i]));
    }
  } else {
    for (unsigned k = 1; k <= a.depth; ++k) {
      const auto forms = induction_system(a, k);
      const auto refs = induction_references(k);
      for (std::size_t i = 0; i < forms.size(); ++i) {
        report.induction.push_back({std::string(kEquationNames[i]), k, forms[i].lhs});
        report.comparisons.push_back(compare(forms[i].lhs, refs[i]));
      }
    }
  }
  return report;
}

namespace {

json ordered_to_json(const OrderedEquation& e, bool show_index) {
  return {{"equation", e.equation},
          {"order", e.order},
          {"lhs", sscalc::to_json(e.lhs)},
          {"latex", sscalc::to_latex(e.lhs, show_index) + " = 0"}};
}

OrderedEquation ordered_from_json(const json& j) {
  return {j.at("equation").get<std::string>(), j.at("order").get<unsigned>(), sscalc::expr_from_json(j.at("lhs"))};
}

std::string emit_json(const HierarchyReport& r) {
  const bool show_index = r.mode == AnsatzMode::Generalized;
  json j;
  j["schema"] = kHierarchySchema;
  j["mode"] = mode_name(r.mode);
  j["depth"] = r.depth;
  j["geometric_order"] = r.geometric_order;
  j["orders"] = json::array();
  for (const auto& e : r.orders) j["orders"].push_back(ordered_to_json(e, show_index));
  j["induction"] = json::array();
  for (const auto& e : r.induction) j["induction"].push_back(ordered_to_json(e, true));
  j["truncation"] = json::array();
  for (const auto& t : r.truncation) {
    j["truncation"].push_back({{"equation", t.equation},
                               {"base", sscalc::to_json(t.base)},
                               {"complete_through", t.complete_through ? json(*t.complete_through) : json()}});
  }
  j["comparisons"] = json::array();
  for (const auto& c : r.comparisons) {
    j["comparisons"].push_back({{"reference", c.reference},
                                {"equation", c.equation},
                                {"order", c.order},
                                {"verdict", verdict_name(c.verdict)},
                                {"scale", c.scale ? json(c.scale->get_str()) : json()},
                                {"only_derived", sscalc::to_json(c.only_derived)},
                                {"only_reference", sscalc::to_json(c.only_reference)},
                                {"note", c.note}});
  }
  j["acceptable"] = r.acceptable();
  return j.dump(2) + "\n";
}

std::string emit_latex(const HierarchyReport& r) {
  const bool show_index = r.mode == AnsatzMode::Generalized;
  std::ostringstream out;
  out << "% self-similar profile hierarchy: mode=" << mode_name(r.mode) << ", depth=" << r.depth << "\n";
  if (r.orders.empty() && r.induction.empty()) {
    out << "% (empty report)\n";
    return out.str();
  }
  auto block = [&](const char* title, const std::vector<OrderedEquation>& eqs, bool idx) {
    if (eqs.empty()) return;
    out << "% " << title << "\n\\begin{align*}\n";
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto& e = eqs[i];
      out << "  &\\text{" << e.equation << ", " << (idx ? "k=" : "order ") << e.order << ":}\\quad "
          << sscalc::to_latex(e.lhs, idx) << " = 0" << (i + 1 < eqs.size() ? " \\\\" : "") << "\n";
    }
    out << "\\end{align*}\n";
  };
  block("collected orders", r.orders, show_index);
  block("induction forms", r.induction, true);
  for (const auto& c : r.comparisons) {
    out << "% compare " << c.reference << ": " << verdict_name(c.verdict);
    if (c.scale) out << " (scale " << c.scale->get_str() << ")";
    out << "\n";
    if (c.verdict != Verdict::Match) {
      out << "%   only derived:   " << sscalc::to_latex(c.only_derived, show_index) << "\n";
      out << "%   only reference: " << sscalc::to_latex(c.only_reference, show_index) << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit(const HierarchyReport& report, EmitFormat format) {
  return format == EmitFormat::Json ? emit_json(report) : emit_latex(report);
}

HierarchyReport parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("hierarchy report: ") + e.what());
  }
  if (j.value("schema", "") != kHierarchySchema) throw ParseError("not a hierarchy/1 document");
  try {
    HierarchyReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.depth = j.at("depth").get<unsigned>();
    r.geometric_order = j.at("geometric_order").get<unsigned>();
    for (const auto& e : j.at("orders")) r.orders.push_back(ordered_from_json(e));
    for (const auto& e : j.at("induction")) r.induction.push_back(ordered_from_json(e));
    for (const auto& t : j.at("truncation")) {
      TruncationInfo info{t.at("equation").get<std::string>(), sscalc::exponent_from_json(t.at("base")),
                          std::nullopt};
      if (!t.at("complete_through").is_null()) info.complete_through = t.at("complete_through").get<unsigned>();
      r.truncation.push_back(std::move(info));
    }
    for (const auto& cj : j.at("comparisons")) {
      Comparison c;
      c.reference = cj.at("reference").get<std::string>();
      c.equation = cj.at("equation").get<std::string>();
      c.order = cj.at("order").get<unsigned>();
      c.verdict = parse_verdict(cj.at("verdict").get<std::string>());
      if (!cj.at("scale").is_null()) c.scale = parse_rational(cj.at("scale").get<std::string>());
      c.only_derived = sscalc::expr_from_json(cj.at("only_derived"));
      c.only_reference = sscalc::expr_from_json(cj.at("only_reference"));
      c.note = cj.at("note").get<std::string>();
      r.comparisons.push_back(std::move(c));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("hierarchy report: ") + e.what());
  }
}

}  // namespace ssblow::hierarchy
