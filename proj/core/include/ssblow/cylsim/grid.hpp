#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "ssblow/field.hpp"

namespace ssblow::cylsim {

enum class ZBoundary { Periodic, Dirichlet };
std::string_view z_boundary_name(ZBoundary b);  // "periodic" / "dirichlet"
ZBoundary parse_z_boundary(std::string_view text);

/// Slab r ∈ [r_min, 1], z ∈ [−z_len, z_len]. Fields use x = r (index i)
/// and y = z (index j). Radial nodes include both ends. Periodic z drops
/// the node at z = z_len; Dirichlet z keeps both ends.
struct CylGrid {
  double r_min = 0.5;
  double z_len = 1.0;
  std::size_t nr = 65;
  std::size_t nz = 128;
  ZBoundary z_boundary = ZBoundary::Periodic;

  double hr() const { return (1.0 - r_min) / static_cast<double>(nr - 1); }
  double hz() const {
    const auto cells = z_boundary == ZBoundary::Periodic ? nz : nz - 1;
    return 2.0 * z_len / static_cast<double>(cells);
  }
  double r(std::size_t i) const { return r_min + static_cast<double>(i) * hr(); }
  double z(std::size_t j) const { return -z_len + static_cast<double>(j) * hz(); }
  bool periodic() const { return z_boundary == ZBoundary::Periodic; }

  /// Throws DomainError unless 0 < r_min < 1, z_len > 0, nr ≥ 5, nz ≥ 5.
  void validate() const;
  ScalarField2D zeros() const;
  ScalarField2D sample(const std::function<double(double, double)>& f) const;
  bool matches(const ScalarField2D& f) const;
};

struct CylState {
  ScalarField2D u1;
  ScalarField2D omega1;
  ScalarField2D psi1;
  double t = 0.0;
};

}  // namespace ssblow::cylsim
