#include "ssblow/rigidity/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "ssblow/numeric.hpp"
#include "ssblow/rigidity/half_plane.hpp"
#include "ssblow/stencil.hpp"

namespace ssblow::rigidity {

SeparabilityResult separability_check(const ScalarField2D& u2, bool assume_decay, double g_tolerance) {
  const std::size_t nR = u2.nx(), nZ = u2.ny();
  if (nR == 0 || nZ == 0) throw std::invalid_argument("separability_check on an empty field");
  SeparabilityResult out;
  std::vector<double> buf;

  out.g.resize(nR);
  buf.resize(nZ);
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) buf[j] = u2(i, j);
    out.g[i] = pairwise_sum(buf) / static_cast<double>(nZ);
  }
  const double grand = pairwise_sum(out.g) / static_cast<double>(nR);
  for (double& g : out.g) g -= grand;

  out.f.resize(nZ);
  buf.resize(nR);
  for (std::size_t j = 0; j < nZ; ++j) {
    for (std::size_t i = 0; i < nR; ++i) buf[i] = u2(i, j);
    out.f[j] = pairwise_sum(buf) / static_cast<double>(nR);
  }

  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) {
      out.residual = std::max(out.residual, std::abs(u2(i, j) - out.f[j] - out.g[i]));
    }
  }
  if (assume_decay) {
    double gmax = 0.0;
    for (double g : out.g) gmax = std::max(gmax, std::abs(g));
    out.g_is_constant = gmax <= g_tolerance;
  }
  return out;
}

ExtremumReport max_principle_scan(const ScalarField2D& F, const ScalarField2D& Psi, double gamma, double c,
                                  double drift_tolerance) {
  if (!F.same_shape(Psi)) throw std::invalid_argument("F and Psi must share a grid");
  const HalfPlaneGrid grid = grid_of(F);
  grid.validate();
  ExtremumReport rep;

  const ScalarField2D psi_Z = diff_y(Psi);
  if (grid.has_axis()) {
    for (std::size_t j = 0; j < F.ny(); ++j) {
      rep.boundary_condition_residual = std::max(rep.boundary_condition_residual, std::abs(psi_Z(F.nx() - 1, j)));
    }
  }

  double best = 0.0;
  for (std::size_t i = 0; i < F.nx(); ++i) {
    for (std::size_t j = 0; j < F.ny(); ++j) {
      if (std::abs(F(i, j)) > best) {
        best = std::abs(F(i, j));
        rep.i = i;
        rep.j = j;
      }
    }
  }
  if (best == 0.0) return rep;

  rep.nonzero_extremum = true;
  rep.value = F(rep.i, rep.j);
  rep.is_maximum = rep.value > 0;
  rep.R = F.x(rep.i);
  rep.Z = F.y(rep.j);
  rep.on_boundary = grid.has_axis() && rep.i + 1 == F.nx();

  const ScalarField2D F_R = diff_x(F), F_Z = diff_y(F), psi_R = diff_x(Psi);
  rep.dR = F_R(rep.i, rep.j);
  rep.dZ = F_Z(rep.i, rep.j);
  const double bR = gamma * rep.R - psi_Z(rep.i, rep.j);
  const double bZ = gamma * rep.Z + psi_R(rep.i, rep.j);
  rep.normal_drift = bR;
  // On R = 0 only ∂_Z F vanishes; ∂_R F is killed by the normal drift.
  rep.drift_term = bR * rep.dR + bZ * rep.dZ;
  rep.transport_residual = c * rep.value + rep.drift_term;
  rep.contradiction = c != 0.0 && std::abs(rep.drift_term) <= drift_tolerance;
  return rep;
}

}  // namespace ssblow::rigidity
