#pragma once

#include <memory>

#include "ssblow/cylsim/grid.hpp"

namespace ssblow::cylsim {

/// Discrete −(∂_r² + (3/r)∂_r + ∂_z²) with ψ = 0 on both radial edges and,
/// for Dirichlet z, on both z edges. The sparse LU factorization is built
/// once and reused; solve() is const and safe to call concurrently.
class PoissonSolver {
 public:
  explicit PoissonSolver(const CylGrid& grid, double residual_tolerance = 1e-10);
  ~PoissonSolver();
  PoissonSolver(PoissonSolver&&) noexcept;
  PoissonSolver& operator=(PoissonSolver&&) noexcept;

  const CylGrid& grid() const { return grid_; }

  /// Throws SolverError if the max-norm residual exceeds
  /// tolerance·max(1, max|ω|).
  ScalarField2D solve(const ScalarField2D& omega1) const;

  /// The discrete operator applied at unknown nodes; zero elsewhere.
  ScalarField2D apply(const ScalarField2D& psi1) const;

 private:
  struct Impl;
  CylGrid grid_;
  double tolerance_;
  std::unique_ptr<Impl> impl_;
};

/// One-off convenience; factorizes every call.
ScalarField2D poisson_solve(const ScalarField2D& omega1, const CylGrid& grid);

}  // namespace ssblow::cylsim
