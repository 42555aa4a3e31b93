#pragma once

#include <functional>
#include <optional>

#include "ssblow/cylsim/grid.hpp"
#include "ssblow/cylsim/poisson.hpp"

namespace ssblow::cylsim {

/// Extra tendencies added to the u₁ and ω₁ right-hand sides.
struct Tendency {
  ScalarField2D u1;
  ScalarField2D omega1;
};
using Forcing = std::function<Tendency(double t, const CylGrid& grid)>;

struct StepOptions {
  double cfl = 0.5;
  double velocity_floor = 1e-12;
  /// Coefficient of the undivided fourth-difference damping; 0 disables it.
  double dissipation = 0.0;
  Forcing forcing;
};

/// Classical RK4 for (u₁, ω₁) with ψ₁ re-solved at every stage.
class Stepper {
 public:
  explicit Stepper(const CylGrid& grid, StepOptions options = {});

  const CylGrid& grid() const { return poisson_.grid(); }
  const PoissonSolver& poisson() const { return poisson_; }

  /// Builds a state at time t with ψ₁ solved from ω₁.
  CylState make_state(ScalarField2D u1, ScalarField2D omega1, double t = 0.0) const;

  /// Largest dt the CFL bound admits for this state.
  double max_stable_dt(const CylState& state) const;

  /// Throws StabilityError when dt breaks the CFL bound or the update is
  /// not finite.
  CylState step(const CylState& state, double dt) const;

 private:
  Tendency rhs(double t, const ScalarField2D& u1, const ScalarField2D& omega1) const;

  PoissonSolver poisson_;
  StepOptions options_;
};

}  // namespace ssblow::cylsim
