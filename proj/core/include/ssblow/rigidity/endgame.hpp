#pragma once

#include <functional>

#include "ssblow/field.hpp"
#include "ssblow/rigidity/half_plane.hpp"

namespace ssblow::rigidity {

struct EndgameOptions {
  /// Largest acceptable |∂_Z data| along R = 0.
  double bc_tolerance = 1e-8;
  /// Half-width of the interior window [−w, 0] × [−w, w] where ∂_ZΨ is measured.
  double interior_window = 2.0;
};

struct EndgameReport {
  double bc_residual = 0.0;
  /// Least-squares Ψ ≈ a·R + b over all nodes.
  double a = 0.0;
  double b = 0.0;
  double fit_residual = 0.0;  // max |Ψ − aR − b|
  double interior_dz_max = 0.0;
  double solve_residual = 0.0;  // max |discrete ΔΨ| at interior nodes
  double truncation_radius = 0.0;
  ScalarField2D psi;
};

/// Harmonic Ψ on the truncated half-plane with Dirichlet data from
/// `boundary_data` on the box edges. The data must be constant along R = 0
/// (∂_ZΨ = 0 there); otherwise BoundaryViolation. Requires omega_is_zero
/// (DomainError otherwise); SolverError if the sparse solve fails.
EndgameReport psi_endgame(bool omega_is_zero, const HalfPlaneGrid& grid,
                          const std::function<double(double, double)>& boundary_data,
                          const EndgameOptions& options = {});

struct Endgame1dReport {
  double a = 0.0;
  double b = 0.0;
  double fit_residual = 0.0;
  std::vector<double> z;
  std::vector<double> psi;
};

/// Ψ''(Z) = 0 on [z_min, z_max] with Ψ(z_min) = left, Ψ(z_max) = right,
/// n ≥ 3 nodes, then Ψ ≈ aZ + b.
Endgame1dReport psi_endgame_1d(double z_min, double z_max, std::size_t n, double left, double right);

}  // namespace ssblow::rigidity
