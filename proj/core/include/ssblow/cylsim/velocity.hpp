#pragma once

#include "ssblow/cylsim/grid.hpp"

namespace ssblow::cylsim {

struct Velocity {
  ScalarField2D ur;
  ScalarField2D uz;
};

/// u^r = −r∂_zψ₁, u^z = 2ψ₁ + r∂_rψ₁ by centered differences (second-order
/// one-sided on radial edges and on Dirichlet z edges).
Velocity reconstruct_velocity(const ScalarField2D& psi1, const CylGrid& grid);

/// Centered first derivatives with the same edge handling.
ScalarField2D d_r(const ScalarField2D& f, const CylGrid& grid);
ScalarField2D d_z(const ScalarField2D& f, const CylGrid& grid);

/// Trapezoid rule for ∫∫ f r³ dr dz (periodic z: plain sum).
double r3_integral(const ScalarField2D& f, const CylGrid& grid);

}  // namespace ssblow::cylsim
