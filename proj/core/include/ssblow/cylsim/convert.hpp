#pragma once

#include "ssblow/cylsim/grid.hpp"

namespace ssblow::cylsim {

/// Azimuthal swirl, vorticity and stream function.
struct PhysicalFields {
  ScalarField2D u_theta;
  ScalarField2D omega_theta;
  ScalarField2D psi_theta;
};

/// Multiplies each field by r.
PhysicalFields convert_physical(const ScalarField2D& u1, const ScalarField2D& omega1, const ScalarField2D& psi1,
                                const CylGrid& grid);
/// Divides by r.
CylState convert_reduced(const PhysicalFields& fields, const CylGrid& grid, double t = 0.0);

}  // namespace ssblow::cylsim
