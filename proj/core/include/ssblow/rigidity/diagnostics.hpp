#pragma once

#include <optional>
#include <vector>

#include "ssblow/field.hpp"

namespace ssblow::rigidity {

/// Least-squares additive split U² ≈ f(Z) + g(R) on a half-plane field.
/// g has zero mean over the R nodes; f(Z_j) carries the constant.
struct SeparabilityResult {
  std::vector<double> f;  // indexed by Z node
  std::vector<double> g;  // indexed by R node
  double residual = 0.0;  // max |U² − f − g|
  /// Set only under the decay hypothesis: whether g is constant
  /// (max |g| ≤ tolerance), which with the mean-zero convention means g = 0.
  std::optional<bool> g_is_constant;
};

SeparabilityResult separability_check(const ScalarField2D& u_squared, bool assume_decay = false,
                                      double g_tolerance = 1e-8);

struct ExtremumReport {
  bool nonzero_extremum = false;
  bool is_maximum = true;
  std::size_t i = 0, j = 0;
  double R = 0.0, Z = 0.0;
  double value = 0.0;
  /// On the R = 0 column.
  bool on_boundary = false;
  /// ∂_R F and ∂_Z F at the extremum (second-order differences).
  double dR = 0.0, dZ = 0.0;
  /// (γY + ∇⊥Ψ)·∇F at the extremum.
  double drift_term = 0.0;
  /// Normal drift γR − ∂_ZΨ, evaluated at the extremum.
  double normal_drift = 0.0;
  /// c·F + drift_term at the extremum.
  double transport_residual = 0.0;
  /// max |∂_ZΨ| over the R = 0 column (0 when the grid has no axis).
  double boundary_condition_residual = 0.0;
  /// The extremum argument applies: F ≠ 0 there, c ≠ 0 and the drift term
  /// is negligible, so a solution would need c·F = 0.
  bool contradiction = false;
};

/// Locates the extremum of F of largest magnitude and evaluates the
/// transport equation cF + (γY + ∇⊥Ψ)·∇F there. `drift_tolerance` decides
/// when the drift term counts as negligible.
ExtremumReport max_principle_scan(const ScalarField2D& F, const ScalarField2D& Psi, double gamma, double c,
                                  double drift_tolerance = 1e-6);

}  // namespace ssblow::rigidity
