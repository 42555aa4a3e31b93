#include "ssblow/rigidity/half_plane.hpp"

#include <cmath>

#include "ssblow/errors.hpp"

namespace ssblow::rigidity {

void HalfPlaneGrid::validate() const {
  if (!(R_min < R_max) || R_max > 0.0) throw DomainError("half-plane grid needs R_min < R_max <= 0");
  if (!(Z_min < Z_max)) throw DomainError("half-plane grid needs Z_min < Z_max");
  if (nR < 3 || nZ < 3) throw DomainError("half-plane grid needs at least 3 nodes per axis");
}

ScalarField2D HalfPlaneGrid::zeros() const {
  validate();
  return ScalarField2D(nR, nZ, R_min, Z_min, hR(), hZ());
}

ScalarField2D HalfPlaneGrid::sample(const std::function<double(double, double)>& f) const {
  validate();
  ScalarField2D out = zeros();
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) out(i, j) = f(R(i), Z(j));
  }
  return out;
}

bool HalfPlaneGrid::matches(const ScalarField2D& f) const {
  const double tol = 1e-12 * (1.0 + std::abs(R_min) + std::abs(Z_min));
  return f.nx() == nR && f.ny() == nZ && std::abs(f.x0() - R_min) <= tol && std::abs(f.y0() - Z_min) <= tol &&
         std::abs(f.hx() - hR()) <= tol && std::abs(f.hy() - hZ()) <= tol;
}

HalfPlaneGrid grid_of(const ScalarField2D& f) {
  HalfPlaneGrid g;
  g.R_min = f.x0();
  g.Z_min = f.y0();
  g.nR = f.nx();
  g.nZ = f.ny();
  g.R_max = f.x(f.nx() - 1);
  if (std::abs(g.R_max) <= 1e-12 * (1.0 + std::abs(g.R_min))) g.R_max = 0.0;  // snap to the axis
  g.Z_max = f.y(f.ny() - 1);
  return g;
}

double cutoff(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double x = s - 1.0;
  return 1.0 - x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

double cutoff_derivative(double s) {
  if (s <= 1.0 || s >= 2.0) return 0.0;
  const double x = s - 1.0;
  return -30.0 * x * x * (1.0 - x) * (1.0 - x);
}

}  // namespace ssblow::rigidity
