#include "ssblow/cylsim/grid.hpp"

#include <cmath>
#include <string>

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

std::string_view z_boundary_name(ZBoundary b) { return b == ZBoundary::Periodic ? "periodic" : "dirichlet"; }

ZBoundary parse_z_boundary(std::string_view text) {
  if (text == "periodic") return ZBoundary::Periodic;
  if (text == "dirichlet") return ZBoundary::Dirichlet;
  throw ParseError("unknown z boundary '" + std::string(text) + "'");
}

void CylGrid::validate() const {
  if (!(r_min > 0.0) || !(r_min < 1.0)) throw DomainError("r_min must lie in (0, 1)");
  if (!(z_len > 0.0)) throw DomainError("z_len must be positive");
  if (nr < 5 || nz < 5) throw DomainError("need at least 5 nodes per direction");
}

ScalarField2D CylGrid::zeros() const { return ScalarField2D(nr, nz, r_min, -z_len, hr(), hz()); }

ScalarField2D CylGrid::sample(const std::function<double(double, double)>& f) const {
  return ScalarField2D::sample(nr, nz, r_min, -z_len, hr(), hz(), f);
}

bool CylGrid::matches(const ScalarField2D& f) const { return zeros().same_shape(f) && f.x0() == r_min; }

}  // namespace ssblow::cylsim
