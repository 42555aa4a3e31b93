#pragma once

#include <cstddef>
#include <functional>

#include "ssblow/field.hpp"

namespace ssblow::rigidity {

/// Uniform node grid on [R_min, R_max] × [Z_min, Z_max] with R_max ≤ 0.
/// Fields on it use x = R (index i) and y = Z (index j).
struct HalfPlaneGrid {
  double R_min = -40.0;
  double R_max = 0.0;
  double Z_min = -40.0;
  double Z_max = 40.0;
  std::size_t nR = 401;
  std::size_t nZ = 801;

  double hR() const { return (R_max - R_min) / static_cast<double>(nR - 1); }
  double hZ() const { return (Z_max - Z_min) / static_cast<double>(nZ - 1); }
  double R(std::size_t i) const { return R_min + static_cast<double>(i) * hR(); }
  double Z(std::size_t j) const { return Z_min + static_cast<double>(j) * hZ(); }
  bool has_axis() const { return R_max == 0.0; }

  /// Throws DomainError unless R_min < R_max ≤ 0, Z_min < Z_max, and at
  /// least 3 nodes per axis.
  void validate() const;
  ScalarField2D zeros() const;
  ScalarField2D sample(const std::function<double(double, double)>& f) const;
  /// Whether `f` lives on this grid (same dims, spacing and origin).
  bool matches(const ScalarField2D& f) const;
};

/// The grid a field was sampled on.
HalfPlaneGrid grid_of(const ScalarField2D& f);

/// Nonincreasing cutoff: 1 on [0, 1], 0 on [2, ∞), quintic smoothstep
/// 1 − (6x⁵ − 15x⁴ + 10x³), x = s − 1, in between (C² at both joins).
double cutoff(double s);
double cutoff_derivative(double s);

}  // namespace ssblow::rigidity
