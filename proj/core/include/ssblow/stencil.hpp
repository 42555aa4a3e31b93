#pragma once

#include "ssblow/field.hpp"

namespace ssblow {

/// ∂/∂x and ∂/∂y with second-order stencils everywhere: centered inside,
/// three-point one-sided on the edges. Needs at least 3 nodes per axis.
ScalarField2D diff_x(const ScalarField2D& f);
ScalarField2D diff_y(const ScalarField2D& f);

/// Trapezoid weight of node i on an axis with n nodes (spacing excluded).
inline double trapezoid_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

}  // namespace ssblow
