#include "ssblow/cylsim/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssblow/cylsim/velocity.hpp"
#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

namespace {

// a += s*b
void axpy(ScalarField2D& a, double s, const ScalarField2D& b) {
  auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += s * y[k];
}

ScalarField2D combined(const ScalarField2D& a, double s, const ScalarField2D& b) {
  ScalarField2D out = a;
  axpy(out, s, b);
  return out;
}

// Undivided fourth differences in r and z, where the stencil fits.
void add_damping(ScalarField2D& out, const ScalarField2D& f, const CylGrid& grid, double eps) {
  const std::size_t nr = grid.nr, nz = grid.nz;
  auto wrap = [&](std::ptrdiff_t j) {
    const auto n = static_cast<std::ptrdiff_t>(nz);
    return static_cast<std::size_t>(((j % n) + n) % n);
  };
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nz; ++j) {
      double d4 = 0.0;
      if (i >= 2 && i + 2 < nr)
        d4 += f(i - 2, j) - 4.0 * f(i - 1, j) + 6.0 * f(i, j) - 4.0 * f(i + 1, j) + f(i + 2, j);
      const auto jj = static_cast<std::ptrdiff_t>(j);
      if (grid.periodic()) {
        d4 += f(i, wrap(jj - 2)) - 4.0 * f(i, wrap(jj - 1)) + 6.0 * f(i, j) - 4.0 * f(i, wrap(jj + 1)) +
              f(i, wrap(jj + 2));
      } else if (j >= 2 && j + 2 < nz) {
        d4 += f(i, j - 2) - 4.0 * f(i, j - 1) + 6.0 * f(i, j) - 4.0 * f(i, j + 1) + f(i, j + 2);
      }
      out(i, j) -= eps * d4;
    }
  }
}

void check_finite(const ScalarField2D& f, const char* name, const CylGrid& grid, double t) {
  for (std::size_t i = 0; i < grid.nr; ++i) {
    for (std::size_t j = 0; j < grid.nz; ++j) {
      if (!std::isfinite(f(i, j))) {
        std::ostringstream msg;
        msg << name << " became non-finite at t = " << t << ", r = " << grid.r(i) << ", z = " << grid.z(j);
        throw StabilityError(msg.str());
      }
    }
  }
}

}  // namespace

Stepper::Stepper(const CylGrid& grid, StepOptions options) : poisson_(grid), options_(std::move(options)) {}

CylState Stepper::make_state(ScalarField2D u1, ScalarField2D omega1, double t) const {
  if (!grid().matches(u1) || !grid().matches(omega1)) throw DomainError("initial fields do not live on the grid");
  CylState s{std::move(u1), std::move(omega1), {}, t};
  s.psi1 = poisson_.solve(s.omega1);
  return s;
}

double Stepper::max_stable_dt(const CylState& state) const {
  const Velocity v = reconstruct_velocity(state.psi1, grid());
  const double speed = std::max({v.ur.max_abs(), v.uz.max_abs(), options_.velocity_floor});
  return options_.cfl * std::min(grid().hr(), grid().hz()) / speed;
}

Tendency Stepper::rhs(double t, const ScalarField2D& u1, const ScalarField2D& omega1) const {
  const CylGrid& g = grid();
  check_finite(u1, "u1", g, t);
  check_finite(omega1, "omega1", g, t);
  const ScalarField2D psi = poisson_.solve(omega1);
  const Velocity v = reconstruct_velocity(psi, g);
  const ScalarField2D psi_z = d_z(psi, g);
  const ScalarField2D u_r = d_r(u1, g), u_z = d_z(u1, g);
  const ScalarField2D w_r = d_r(omega1, g), w_z = d_z(omega1, g);
  ScalarField2D u_sq = u1;
  for (auto& x : u_sq.data()) x *= x;
  const ScalarField2D u_sq_z = d_z(u_sq, g);

  Tendency out{g.zeros(), g.zeros()};
  for (std::size_t i = 0; i < g.nr; ++i) {
    for (std::size_t j = 0; j < g.nz; ++j) {
      const double ur = v.ur(i, j), uz = v.uz(i, j);
      out.u1(i, j) = -ur * u_r(i, j) - uz * u_z(i, j) + 2.0 * u1(i, j) * psi_z(i, j);
      out.omega1(i, j) = -ur * w_r(i, j) - uz * w_z(i, j) + u_sq_z(i, j);
    }
  }
  if (options_.dissipation > 0.0) {
    add_damping(out.u1, u1, g, options_.dissipation);
    add_damping(out.omega1, omega1, g, options_.dissipation);
  }
  if (options_.forcing) {
    const Tendency f = options_.forcing(t, g);
    axpy(out.u1, 1.0, f.u1);
    axpy(out.omega1, 1.0, f.omega1);
  }
  if (!g.periodic()) {
    // Dirichlet z edges keep their values.
    for (std::size_t i = 0; i < g.nr; ++i) {
      for (std::size_t j : {std::size_t{0}, g.nz - 1}) {
        out.u1(i, j) = 0.0;
        out.omega1(i, j) = 0.0;
      }
    }
  }
  return out;
}

CylState Stepper::step(const CylState& s, double dt) const {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  const double bound = max_stable_dt(s);
  if (dt > bound) {
    throw StabilityError("dt = " + std::to_string(dt) + " exceeds the CFL bound " + std::to_string(bound));
  }
  const double t = s.t;
  const Tendency k1 = rhs(t, s.u1, s.omega1);
  const Tendency k2 = rhs(t + 0.5 * dt, combined(s.u1, 0.5 * dt, k1.u1), combined(s.omega1, 0.5 * dt, k1.omega1));
  const Tendency k3 = rhs(t + 0.5 * dt, combined(s.u1, 0.5 * dt, k2.u1), combined(s.omega1, 0.5 * dt, k2.omega1));
  const Tendency k4 = rhs(t + dt, combined(s.u1, dt, k3.u1), combined(s.omega1, dt, k3.omega1));

  CylState next{s.u1, s.omega1, {}, t + dt};
  for (const auto& [k, w] : {std::pair{&k1, 1.0}, std::pair{&k2, 2.0}, std::pair{&k3, 2.0}, std::pair{&k4, 1.0}}) {
    axpy(next.u1, dt * w / 6.0, k->u1);
    axpy(next.omega1, dt * w / 6.0, k->omega1);
  }
  check_finite(next.u1, "u1", grid(), next.t);
  check_finite(next.omega1, "omega1", grid(), next.t);
  next.psi1 = poisson_.solve(next.omega1);
  return next;
}

}  // namespace ssblow::cylsim
