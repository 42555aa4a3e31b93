#include "ssblow/cylsim/poisson.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

struct PoissonSolver::Impl {
  Eigen::SparseMatrix<double> matrix;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  std::size_t j_begin = 0;
  std::size_t j_end = 0;

  std::size_t rows() const { return j_end - j_begin; }
  Eigen::Index index(std::size_t i, std::size_t j) const {
    return static_cast<Eigen::Index>((i - 1) * rows() + (j - j_begin));
  }
};

PoissonSolver::PoissonSolver(const CylGrid& grid, double residual_tolerance)
    : grid_(grid), tolerance_(residual_tolerance), impl_(std::make_unique<Impl>()) {
  grid_.validate();
  const std::size_t nr = grid_.nr, nz = grid_.nz;
  impl_->j_begin = grid_.periodic() ? 0 : 1;
  impl_->j_end = grid_.periodic() ? nz : nz - 1;
  const auto n = static_cast<Eigen::Index>((nr - 2) * impl_->rows());
  const double hr = grid_.hr(), hz = grid_.hz();
  const double cr = 1.0 / (hr * hr), cz = 1.0 / (hz * hz);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * 5);
  for (std::size_t i = 1; i + 1 < nr; ++i) {
    const double drift = 3.0 / grid_.r(i) / (2.0 * hr);
    for (std::size_t j = impl_->j_begin; j < impl_->j_end; ++j) {
      const auto row = impl_->index(i, j);
      triplets.emplace_back(row, row, 2.0 * cr + 2.0 * cz);
      if (i > 1) triplets.emplace_back(row, impl_->index(i - 1, j), -cr + drift);
      if (i + 2 < nr) triplets.emplace_back(row, impl_->index(i + 1, j), -cr - drift);
      auto couple_z = [&](std::size_t jj) { triplets.emplace_back(row, impl_->index(i, jj), -cz); };
      if (grid_.periodic()) {
        couple_z(j == 0 ? nz - 1 : j - 1);
        couple_z(j + 1 == nz ? 0 : j + 1);
      } else {
        if (j > 1) couple_z(j - 1);
        if (j + 2 < nz) couple_z(j + 1);
      }
    }
  }
  impl_->matrix.resize(n, n);
  impl_->matrix.setFromTriplets(triplets.begin(), triplets.end());
  impl_->matrix.makeCompressed();
  impl_->lu.analyzePattern(impl_->matrix);
  impl_->lu.factorize(impl_->matrix);
  if (impl_->lu.info() != Eigen::Success) throw SolverError("Poisson factorization failed: " + impl_->lu.lastErrorMessage());
}

PoissonSolver::~PoissonSolver() = default;
PoissonSolver::PoissonSolver(PoissonSolver&&) noexcept = default;
PoissonSolver& PoissonSolver::operator=(PoissonSolver&&) noexcept = default;

ScalarField2D PoissonSolver::solve(const ScalarField2D& omega1) const {
  if (!grid_.matches(omega1)) throw DomainError("vorticity does not live on the solver grid");
  const auto n = impl_->matrix.rows();
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 1; i + 1 < grid_.nr; ++i)
    for (std::size_t j = impl_->j_begin; j < impl_->j_end; ++j) rhs[impl_->index(i, j)] = omega1(i, j);

  Eigen::VectorXd x = impl_->lu.solve(rhs);
  if (impl_->lu.info() != Eigen::Success) throw SolverError("Poisson solve failed");
  const double residual = (impl_->matrix * x - rhs).lpNorm<Eigen::Infinity>();
  const double scale = std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
  if (!(residual <= tolerance_ * scale)) {
    throw SolverError("Poisson residual " + std::to_string(residual) + " above tolerance");
  }

  ScalarField2D psi = grid_.zeros();
  for (std::size_t i = 1; i + 1 < grid_.nr; ++i)
    for (std::size_t j = impl_->j_begin; j < impl_->j_end; ++j) psi(i, j) = x[impl_->index(i, j)];
  return psi;
}

ScalarField2D PoissonSolver::apply(const ScalarField2D& psi1) const {
  if (!grid_.matches(psi1)) throw DomainError("stream function does not live on the solver grid");
  const std::size_t nr = grid_.nr, nz = grid_.nz;
  const double hr = grid_.hr(), hz = grid_.hz();
  ScalarField2D out = grid_.zeros();
  for (std::size_t i = 1; i + 1 < nr; ++i) {
    const double r = grid_.r(i);
    for (std::size_t j = impl_->j_begin; j < impl_->j_end; ++j) {
      const std::size_t jm = j == 0 ? nz - 1 : j - 1;
      const std::size_t jp = j + 1 == nz ? 0 : j + 1;
      const double prr = (psi1(i + 1, j) - 2.0 * psi1(i, j) + psi1(i - 1, j)) / (hr * hr);
      const double pr = (psi1(i + 1, j) - psi1(i - 1, j)) / (2.0 * hr);
      const double pzz = (psi1(i, jp) - 2.0 * psi1(i, j) + psi1(i, jm)) / (hz * hz);
      out(i, j) = -(prr + 3.0 / r * pr + pzz);
    }
  }
  return out;
}

ScalarField2D poisson_solve(const ScalarField2D& omega1, const CylGrid& grid) {
  return PoissonSolver(grid).solve(omega1);
}

}  // namespace ssblow::cylsim
