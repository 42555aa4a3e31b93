#include "ssblow/cylsim/convert.hpp"

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

namespace {

ScalarField2D scaled_by_r(const ScalarField2D& f, const CylGrid& grid, bool divide) {
  if (!grid.matches(f)) throw DomainError("field does not live on the grid");
  ScalarField2D out = f;
  for (std::size_t i = 0; i < grid.nr; ++i) {
    const double r = grid.r(i);
    for (std::size_t j = 0; j < grid.nz; ++j) out(i, j) = divide ? f(i, j) / r : f(i, j) * r;
  }
  return out;
}

}  // namespace

PhysicalFields convert_physical(const ScalarField2D& u1, const ScalarField2D& omega1, const ScalarField2D& psi1,
                                const CylGrid& grid) {
  return {scaled_by_r(u1, grid, false), scaled_by_r(omega1, grid, false), scaled_by_r(psi1, grid, false)};
}

CylState convert_reduced(const PhysicalFields& fields, const CylGrid& grid, double t) {
  return {scaled_by_r(fields.u_theta, grid, true), scaled_by_r(fields.omega_theta, grid, true),
          scaled_by_r(fields.psi_theta, grid, true), t};
}

}  // namespace ssblow::cylsim
