#include "ssblow/field.hpp"

#include <cmath>

namespace ssblow {

ScalarField2D::ScalarField2D(std::size_t nx, std::size_t ny, double x0, double y0, double hx,
                             double hy, double fill)
    : nx_(nx), ny_(ny), x0_(x0), y0_(y0), hx_(hx), hy_(hy), data_(nx * ny, fill) {}

ScalarField2D ScalarField2D::sample(std::size_t nx, std::size_t ny, double x0, double y0,
                                    double hx, double hy,
                                    const std::function<double(double, double)>& f) {
  ScalarField2D out(nx, ny, x0, y0, hx, hy);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) out(i, j) = f(out.x(i), out.y(j));
  }
  return out;
}

bool ScalarField2D::same_shape(const ScalarField2D& other) const {
  return nx_ == other.nx_ && ny_ == other.ny_ && hx_ == other.hx_ && hy_ == other.hy_ &&
         x0_ == other.x0_ && y0_ == other.y0_;
}

double ScalarField2D::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace ssblow
