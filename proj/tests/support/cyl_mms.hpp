#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ssblow/cylsim/grid.hpp"
#include "ssblow/cylsim/stepper.hpp"
#include "ssblow/cylsim/velocity.hpp"

namespace ssblow::oracle {

/// Dense polynomial in r, lowest degree first.
struct Poly {
  std::vector<double> c;

  double operator()(double r) const {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
    return v;
  }
  Poly derivative() const {
    Poly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(static_cast<double>(k) * c[k]);
    return d;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p{std::vector<double>(a.c.size() + b.c.size() - 1, 0.0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    return p;
  }
};

/// ψ* = scale·A(t)·(1−r)²(r−r_min)²·sin(kz), k = π/z_len, A(t) = 1 + t/2,
/// with ω* its exact image under −(∂_r² + (3/r)∂_r + ∂_z²), and the swirl
/// u* = r²cos(kz − t) + 1/2.
struct CylManufactured {
  double r_min = 0.5;
  double z_len = 1.0;
  double scale = 10.0;
  Poly B, B1, B2, B3;
  double k = 0.0;

  CylManufactured(double rmin, double zlen, double s) : r_min(rmin), z_len(zlen), scale(s) {
    const Poly a{{1.0, -1.0}}, b{{-rmin, 1.0}};
    B = a * a * b * b;
    B1 = B.derivative();
    B2 = B1.derivative();
    B3 = B2.derivative();
    k = std::numbers::pi / zlen;
  }

  double amp(double t) const { return scale * (1.0 + 0.5 * t); }
  double G(double r) const { return B2(r) + 3.0 * B1(r) / r - k * k * B(r); }
  double G1(double r) const { return B3(r) + 3.0 * B2(r) / r - 3.0 * B1(r) / (r * r) - k * k * B1(r); }

  double psi(double r, double z, double t) const { return amp(t) * B(r) * std::sin(k * z); }
  double omega(double r, double z, double t) const { return -amp(t) * std::sin(k * z) * G(r); }
  double u(double r, double z, double t) const { return r * r * std::cos(k * z - t) + 0.5; }

  cylsim::Tendency forcing(double t, const cylsim::CylGrid& grid) const {
    cylsim::Tendency f{grid.zeros(), grid.zeros()};
    const double A = amp(t), At = 0.5 * scale;
    for (std::size_t i = 0; i < grid.nr; ++i) {
      const double r = grid.r(i);
      for (std::size_t j = 0; j < grid.nz; ++j) {
        const double z = grid.z(j);
        const double s = std::sin(k * z), c = std::cos(k * z);
        const double ph = k * z - t;
        const double uu = r * r * std::cos(ph) + 0.5;
        const double u_t = r * r * std::sin(ph), u_r = 2.0 * r * std::cos(ph), u_z = -k * r * r * std::sin(ph);
        const double p = A * B(r) * s, p_r = A * B1(r) * s, p_z = A * B(r) * k * c;
        const double ur = -r * p_z, uz = 2.0 * p + r * p_r;
        const double w_t = -At * s * G(r), w_r = -A * s * G1(r), w_z = -A * k * c * G(r);
        f.u1(i, j) = u_t + ur * u_r + uz * u_z - 2.0 * uu * p_z;
        f.omega1(i, j) = w_t + ur * w_r + uz * w_z - 2.0 * uu * u_z;
      }
    }
    return f;
  }
};

struct MmsError {
  double u1 = 0.0;
  double omega1 = 0.0;
  /// max|u^r| on r = 1 over all steps.
  double wall_ur = 0.0;
};

/// Runs the forced stepper from the manufactured data to t_end with
/// dt = cfl_fraction·min(hr, hz) and reports max-norm errors at t_end.
inline MmsError mms_stepper_error(std::size_t nr, std::size_t nz, double t_end, double dt_per_h = 0.2) {
  const CylManufactured m(0.5, 1.0, 10.0);
  cylsim::CylGrid grid;
  grid.r_min = m.r_min;
  grid.z_len = m.z_len;
  grid.nr = nr;
  grid.nz = nz;
  cylsim::StepOptions opts;
  opts.forcing = [&m](double t, const cylsim::CylGrid& g) { return m.forcing(t, g); };
  const cylsim::Stepper stepper(grid, opts);
  auto s = stepper.make_state(grid.sample([&](double r, double z) { return m.u(r, z, 0.0); }),
                              grid.sample([&](double r, double z) { return m.omega(r, z, 0.0); }));
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / (dt_per_h * std::min(grid.hr(), grid.hz()))));
  const double dt = t_end / static_cast<double>(steps);
  MmsError e;
  for (std::size_t n = 0; n < steps; ++n) {
    s = stepper.step(s, dt);
    const auto v = cylsim::reconstruct_velocity(s.psi1, grid);
    for (std::size_t j = 0; j < grid.nz; ++j) e.wall_ur = std::max(e.wall_ur, std::abs(v.ur(grid.nr - 1, j)));
  }
  for (std::size_t i = 0; i < grid.nr; ++i) {
    for (std::size_t j = 0; j < grid.nz; ++j) {
      e.u1 = std::max(e.u1, std::abs(s.u1(i, j) - m.u(grid.r(i), grid.z(j), s.t)));
      e.omega1 = std::max(e.omega1, std::abs(s.omega1(i, j) - m.omega(grid.r(i), grid.z(j), s.t)));
    }
  }
  return e;
}

}  // namespace ssblow::oracle
