#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ssblow::sscalc {

/// Which profile a symbol refers to.
enum class Field : std::uint8_t { U = 0, Omega = 1, Psi = 2 };

std::string_view field_name(Field f);  // "U", "Omega", "Psi"
Field parse_field(std::string_view name);

/// ∂_R^dR ∂_Z^dZ of profile `field` with series index `k`. Single-profile
/// ansätze only ever use k = 0.
struct ProfileRef {
  Field field = Field::U;
  std::uint32_t k = 0;
  std::uint32_t dR = 0;
  std::uint32_t dZ = 0;

  ProfileRef derived_R() const { return {field, k, dR + 1, dZ}; }
  ProfileRef derived_Z() const { return {field, k, dR, dZ + 1}; }
  ProfileRef underived() const { return {field, k, 0, 0}; }
  bool is_derivative() const { return dR + dZ > 0; }

  friend auto operator<=>(const ProfileRef&, const ProfileRef&) = default;
};

}  // namespace ssblow::sscalc
