#include "ssblow/cylsim/velocity.hpp"

#include <vector>

#include "ssblow/errors.hpp"
#include "ssblow/numeric.hpp"

namespace ssblow::cylsim {

namespace {

void require(const ScalarField2D& f, const CylGrid& grid) {
  if (!grid.matches(f)) throw DomainError("field does not live on the grid");
}

}  // namespace

ScalarField2D d_r(const ScalarField2D& f, const CylGrid& grid) {
  require(f, grid);
  const std::size_t nr = grid.nr, nz = grid.nz;
  const double inv = 1.0 / (2.0 * grid.hr());
  ScalarField2D out = grid.zeros();
  for (std::size_t j = 0; j < nz; ++j) {
    out(0, j) = (-3.0 * f(0, j) + 4.0 * f(1, j) - f(2, j)) * inv;
    for (std::size_t i = 1; i + 1 < nr; ++i) out(i, j) = (f(i + 1, j) - f(i - 1, j)) * inv;
    out(nr - 1, j) = (3.0 * f(nr - 1, j) - 4.0 * f(nr - 2, j) + f(nr - 3, j)) * inv;
  }
  return out;
}

ScalarField2D d_z(const ScalarField2D& f, const CylGrid& grid) {
  require(f, grid);
  const std::size_t nr = grid.nr, nz = grid.nz;
  const double inv = 1.0 / (2.0 * grid.hz());
  ScalarField2D out = grid.zeros();
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 1; j + 1 < nz; ++j) out(i, j) = (f(i, j + 1) - f(i, j - 1)) * inv;
    if (grid.periodic()) {
      out(i, 0) = (f(i, 1) - f(i, nz - 1)) * inv;
      out(i, nz - 1) = (f(i, 0) - f(i, nz - 2)) * inv;
    } else {
      out(i, 0) = (-3.0 * f(i, 0) + 4.0 * f(i, 1) - f(i, 2)) * inv;
      out(i, nz - 1) = (3.0 * f(i, nz - 1) - 4.0 * f(i, nz - 2) + f(i, nz - 3)) * inv;
    }
  }
  return out;
}

Velocity reconstruct_velocity(const ScalarField2D& psi1, const CylGrid& grid) {
  Velocity v{d_z(psi1, grid), d_r(psi1, grid)};
  for (std::size_t i = 0; i < grid.nr; ++i) {
    const double r = grid.r(i);
    for (std::size_t j = 0; j < grid.nz; ++j) {
      v.ur(i, j) = -r * v.ur(i, j);
      v.uz(i, j) = 2.0 * psi1(i, j) + r * v.uz(i, j);
    }
  }
  return v;
}

double r3_integral(const ScalarField2D& f, const CylGrid& grid) {
  require(f, grid);
  std::vector<double> terms;
  terms.reserve(f.size());
  for (std::size_t i = 0; i < grid.nr; ++i) {
    const double r = grid.r(i);
    const double wr = (i == 0 || i + 1 == grid.nr) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < grid.nz; ++j) {
      const double wz = (!grid.periodic() && (j == 0 || j + 1 == grid.nz)) ? 0.5 : 1.0;
      terms.push_back(wr * wz * r * r * r * f(i, j));
    }
  }
  return pairwise_sum(terms) * grid.hr() * grid.hz();
}

}  // namespace ssblow::cylsim
