#pragma once

#include <filesystem>
#include <iosfwd>

#include "ssblow/field.hpp"

namespace ssblow {

// Binary grid layout: four native-endian 64-bit floats (nx, ny, hx, hy)
// followed by nx*ny 64-bit floats, row-major with the second index
// fastest. Origins are not part of the format; readers get (0, 0).
void write_grid_binary(std::ostream& out, const ScalarField2D& field);
ScalarField2D read_grid_binary(std::istream& in);
void write_grid_binary(const std::filesystem::path& path, const ScalarField2D& field);
ScalarField2D read_grid_binary(const std::filesystem::path& path);

// CSV: header "x,y,value", one node per line. Keeps origins.
void write_grid_csv(std::ostream& out, const ScalarField2D& field);
ScalarField2D read_grid_csv(std::istream& in);

}  // namespace ssblow
