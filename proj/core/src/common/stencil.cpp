#include "ssblow/stencil.hpp"

#include <stdexcept>

namespace ssblow {

namespace {

template <class At>
double one_axis(At at, std::size_t k, std::size_t n, double h) {
  if (k == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
  if (k + 1 == n) return (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
  return (at(k + 1) - at(k - 1)) / (2.0 * h);
}

}  // namespace

ScalarField2D diff_x(const ScalarField2D& f) {
  if (f.nx() < 3) throw std::invalid_argument("diff_x needs at least 3 nodes");
  ScalarField2D out(f.nx(), f.ny(), f.x0(), f.y0(), f.hx(), f.hy());
  for (std::size_t i = 0; i < f.nx(); ++i) {
    for (std::size_t j = 0; j < f.ny(); ++j) {
      out(i, j) = one_axis([&](std::size_t a) { return f(a, j); }, i, f.nx(), f.hx());
    }
  }
  return out;
}

ScalarField2D diff_y(const ScalarField2D& f) {
  if (f.ny() < 3) throw std::invalid_argument("diff_y needs at least 3 nodes");
  ScalarField2D out(f.nx(), f.ny(), f.x0(), f.y0(), f.hx(), f.hy());
  for (std::size_t i = 0; i < f.nx(); ++i) {
    for (std::size_t j = 0; j < f.ny(); ++j) {
      out(i, j) = one_axis([&](std::size_t b) { return f(i, b); }, j, f.ny(), f.hy());
    }
  }
  return out;
}

}  // namespace ssblow
