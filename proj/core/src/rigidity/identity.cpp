#include "ssblow/rigidity/identity.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssblow/errors.hpp"
#include "ssblow/numeric.hpp"
#include "ssblow/stencil.hpp"

namespace ssblow::rigidity {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int k = 0; k < p; ++k) r *= x;
  return r;
}

ScalarField2D coarsen(const ScalarField2D& f) {
  if (f.nx() % 2 == 0 || f.ny() % 2 == 0) throw DomainError("coarsening needs odd node counts");
  ScalarField2D out((f.nx() + 1) / 2, (f.ny() + 1) / 2, f.x0(), f.y0(), 2 * f.hx(), 2 * f.hy());
  for (std::size_t i = 0; i < out.nx(); ++i) {
    for (std::size_t j = 0; j < out.ny(); ++j) out(i, j) = f(2 * i, 2 * j);
  }
  return out;
}

}  // namespace

IbpReport ibp_identity_check(const ScalarField2D& U, const ScalarField2D& Psi, double gamma, int p, double rho,
                             const IbpOptions& options) {
  if (p <= 0 || p % 2 != 0) throw DomainError("p must be a positive even integer");
  if (!(rho > 0)) throw DomainError("rho must be positive");
  if (!U.same_shape(Psi)) throw std::invalid_argument("U and Psi must share a grid");
  const HalfPlaneGrid grid = grid_of(U);
  grid.validate();
  const std::size_t nR = U.nx(), nZ = U.ny();
  const double hR = U.hx(), hZ = U.hy();

  IbpReport rep;
  rep.gamma = gamma;
  rep.p = p;
  rep.rho = rho;
  rep.h = std::max(hR, hZ);

  const ScalarField2D psi_R = diff_x(Psi), psi_Z = diff_y(Psi);
  if (grid.has_axis()) {
    for (std::size_t j = 0; j < nZ; ++j) rep.bc_residual = std::max(rep.bc_residual, std::abs(psi_Z(nR - 1, j)));
    if (options.enforce_boundary_condition && rep.bc_residual > options.bc_tolerance) {
      throw BoundaryViolation("max |dPsi/dZ| on R = 0 is " + std::to_string(rep.bc_residual) +
                              ", identity not applicable");
    }
  }

  ScalarField2D up(nR, nZ, U.x0(), U.y0(), hR, hZ);
  for (std::size_t k = 0; k < up.size(); ++k) up.data()[k] = ipow(U.data()[k], p);
  const ScalarField2D up_R = diff_x(up), up_Z = diff_y(up);

  std::vector<double> lhs, rhs, transport;
  lhs.reserve(up.size());
  rhs.reserve(up.size());
  transport.reserve(up.size());
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) {
      const double R = U.x(i), Z = U.y(j);
      const double w = trapezoid_weight(i, nR) * trapezoid_weight(j, nZ) * hR * hZ;
      const double r = std::hypot(R, Z);
      const double sigma = cutoff(r / rho);
      const double bR = gamma * R - psi_Z(i, j);
      const double bZ = gamma * Z + psi_R(i, j);
      double grad_dot_b = 0.0;
      if (r > 0.0) grad_dot_b = cutoff_derivative(r / rho) / (rho * r) * (R * bR + Z * bZ);
      lhs.push_back(w * 2.0 * gamma * up(i, j) * sigma);
      rhs.push_back(-w * up(i, j) * grad_dot_b);
      transport.push_back(w * sigma * (bR * up_R(i, j) + bZ * up_Z(i, j)));
    }
  }
  rep.lhs = pairwise_sum(lhs);
  rep.rhs = pairwise_sum(rhs);
  rep.transport_term = pairwise_sum(transport);

  // Outward flux through the four edges of the box.
  std::vector<double> flux;
  auto edge = [&](std::size_t i, std::size_t j, double normal_R, double normal_Z, double weight) {
    const double R = U.x(i), Z = U.y(j);
    const double bR = gamma * R - psi_Z(i, j);
    const double bZ = gamma * Z + psi_R(i, j);
    flux.push_back(weight * up(i, j) * cutoff(std::hypot(R, Z) / rho) * (bR * normal_R + bZ * normal_Z));
  };
  for (std::size_t j = 0; j < nZ; ++j) {
    edge(nR - 1, j, 1.0, 0.0, trapezoid_weight(j, nZ) * hZ);
    edge(0, j, -1.0, 0.0, trapezoid_weight(j, nZ) * hZ);
  }
  for (std::size_t i = 0; i < nR; ++i) {
    edge(i, nZ - 1, 0.0, 1.0, trapezoid_weight(i, nR) * hR);
    edge(i, 0, 0.0, -1.0, trapezoid_weight(i, nR) * hR);
  }
  rep.boundary_term = pairwise_sum(flux);
  rep.balance = rep.lhs - (rep.rhs + rep.boundary_term - rep.transport_term);
  return rep;
}

IbpVerdict ibp_identity_verdict(const ScalarField2D& U, const ScalarField2D& Psi, double gamma, int p, double rho,
                                const IbpOptions& options) {
  IbpVerdict v;
  v.fine = ibp_identity_check(U, Psi, gamma, p, rho, options);
  v.coarse = ibp_identity_check(coarsen(U), coarsen(Psi), gamma, p, rho, options);
  // balance ≈ C·h²: the fine-grid error is about |Δ|/3; allow a factor 10.
  const double scale = std::max(std::abs(v.fine.lhs), 1.0);
  v.tolerance = std::max(10.0 * std::abs(v.fine.balance - v.coarse.balance) / 3.0, 1e-12 * scale);
  v.passes = std::abs(v.fine.balance) <= v.tolerance;
  return v;
}

std::string_view preset_name(IdentityPreset p) { return p == IdentityPreset::Rays ? "rays" : "compact"; }

IdentityPreset parse_preset(std::string_view name) {
  if (name == "rays") return IdentityPreset::Rays;
  if (name == "compact") return IdentityPreset::Compact;
  throw std::invalid_argument("unknown identity preset '" + std::string(name) + "'");
}

IdentityInputs identity_preset(IdentityPreset preset, const HalfPlaneGrid& grid, double eps) {
  IdentityInputs in;
  in.gamma = 2.0;
  if (preset == IdentityPreset::Rays) {
    // Ψ = βR makes b = γ(R, Z − Z_s) with Z_s = −β/γ, so any function of the
    // angle about (0, Z_s) is transported.
    const double beta = -2.0, zs = -beta / in.gamma, A = 1.0, B = 0.5;
    in.Psi = grid.sample([&](double R, double Z) { return beta * R + eps * Z; });
    in.U = grid.sample([&](double R, double Z) {
      const double dz = Z - zs, r2 = R * R + dz * dz;
      const double cos2 = r2 > 0.0 ? (R * R - dz * dz) / r2 : 0.0;
      return std::sqrt(A + B * cos2);
    });
    in.description = "U^2 = 1 + 0.5 cos(2 theta) about (0, 1), Psi = -2R, gamma = 2";
  } else {
    const double cR = -3.0, cZ = 0.0, a = 2.0;
    in.Psi = grid.sample([&](double R, double Z) { return -2.0 * R + 0.3 * R * R * std::sin(0.2 * Z) + eps * Z; });
    in.U = grid.sample([&](double R, double Z) {
      const double s2 = ((R - cR) * (R - cR) + (Z - cZ) * (Z - cZ)) / (a * a);
      return s2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s2)) : 0.0;
    });
    in.description = "smooth bump of radius 2 at (-3, 0), Psi = -2R + 0.3 R^2 sin(0.2 Z), gamma = 2";
  }
  return in;
}

}  // namespace ssblow::rigidity
