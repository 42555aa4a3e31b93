#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssblow/hierarchy/ansatz.hpp"
#include "ssblow/hierarchy/references.hpp"

namespace ssblow::hierarchy {

enum class Verdict {
  Match,                  // canonical forms are identical
  ScalarMultiple,         // derived = c·reference with rational c ≠ 0 (same zero set)
  DocumentedDiscrepancy,  // differs from a reference flagged known_discrepancy
  Mismatch,
};

std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct Comparison {
  std::string reference;  // ReferenceEquation::id
  std::string equation;
  unsigned order = 0;
  Verdict verdict = Verdict::Mismatch;
  std::optional<Rational> scale;  // set for ScalarMultiple
  SymExpr only_derived;           // terms (with coefficients) absent from the reference
  SymExpr only_reference;
  std::string note;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// Canonical-form comparison of a derived equation with a reference.
Comparison compare(const SymExpr& derived, const ReferenceEquation& reference);

struct OrderedEquation {
  std::string equation;  // "u", "omega", "psi"
  unsigned order = 0;    // τ-order k, or the series index for induction forms
  SymExpr lhs;
  friend bool operator==(const OrderedEquation&, const OrderedEquation&) = default;
};

struct TruncationInfo {
  std::string equation;
  SsExponent base;
  /// Highest order that is exact for the untruncated ansatz; nullopt when
  /// every collected order is exact.
  std::optional<unsigned> complete_through;
  friend bool operator==(const TruncationInfo&, const TruncationInfo&) = default;
};

struct HierarchyReport {
  AnsatzMode mode = AnsatzMode::Single;
  unsigned depth = 0;
  unsigned geometric_order = 0;
  std::vector<OrderedEquation> orders;
  std::vector<OrderedEquation> induction;
  std::vector<TruncationInfo> truncation;
  std::vector<Comparison> comparisons;

  /// Every comparison is a match, a scalar multiple, or a documented discrepancy.
  bool acceptable() const;
  const OrderedEquation* find(std::string_view equation, unsigned order) const;
  const Comparison* comparison(std::string_view reference_id) const;
  friend bool operator==(const HierarchyReport&, const HierarchyReport&) = default;
};

/// Substitutes the ansatz, collects orders 0..depth of each equation,
/// derives the induction forms for k = 1..depth (generalized mode), and
/// compares everything that has a published counterpart.
HierarchyReport derive_hierarchy(const AnsatzSpec& a);

/// Decoupled equations for (U_k, Ω_k, Ψ_k) when U_j = Ω_j = 0 and Ψ_j is
/// constant for all j < k. With `gamma` the γ-dependent coefficients are
/// evaluated exactly; otherwise they stay affine in γ. Requires k ≥ 1.
std::vector<SymEquation> induction_system(const AnsatzSpec& a, unsigned k,
                                          const std::optional<Rational>& gamma = std::nullopt);

enum class EmitFormat { Json, Latex };

inline constexpr std::string_view kHierarchySchema = "hierarchy/1";

/// Deterministic serialization; JSON carries "schema":"hierarchy/1".
std::string emit(const HierarchyReport& report, EmitFormat format);
HierarchyReport parse_report(std::string_view json_text);

}  // namespace ssblow::hierarchy
