#include "ssblow/rigidity/endgame.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <vector>

#include "ssblow/errors.hpp"
#include "ssblow/numeric.hpp"
#include "ssblow/stencil.hpp"

namespace ssblow::rigidity {

namespace {

void fit_affine(std::span<const double> x, std::span<const double> y, double& a, double& b, double& residual) {
  const LinearFit fit = fit_line(x, y);
  a = fit.slope;
  b = fit.intercept;
  residual = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) residual = std::max(residual, std::abs(y[k] - a * x[k] - b));
}

}  // namespace

EndgameReport psi_endgame(bool omega_is_zero, const HalfPlaneGrid& grid,
                          const std::function<double(double, double)>& data, const EndgameOptions& options) {
  if (!omega_is_zero) throw DomainError("the harmonic endgame needs Omega = 0");
  grid.validate();
  const std::size_t nR = grid.nR, nZ = grid.nZ;
  const double hR = grid.hR(), hZ = grid.hZ();

  EndgameReport rep;
  rep.truncation_radius = std::max({std::abs(grid.R_min), std::abs(grid.Z_min), std::abs(grid.Z_max)});
  if (grid.has_axis()) {
    for (std::size_t j = 1; j + 1 < nZ; ++j) {
      const double d = (data(0.0, grid.Z(j + 1)) - data(0.0, grid.Z(j - 1))) / (2.0 * hZ);
      rep.bc_residual = std::max(rep.bc_residual, std::abs(d));
    }
    if (rep.bc_residual > options.bc_tolerance) {
      throw BoundaryViolation("boundary data is not constant along R = 0 (max |dPsi/dZ| = " +
                              std::to_string(rep.bc_residual) + ")");
    }
  }

  // Unknowns are the interior nodes; edges carry the data.
  const std::size_t mR = nR - 2, mZ = nZ - 2;
  auto idx = [&](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>((i - 1) * mZ + (j - 1)); };
  rep.psi = grid.zeros();
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) {
      if (i == 0 || j == 0 || i + 1 == nR || j + 1 == nZ) rep.psi(i, j) = data(grid.R(i), grid.Z(j));
    }
  }

  const double cR = 1.0 / (hR * hR), cZ = 1.0 / (hZ * hZ);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(5 * mR * mZ);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mR * mZ));
  for (std::size_t i = 1; i + 1 < nR; ++i) {
    for (std::size_t j = 1; j + 1 < nZ; ++j) {
      const Eigen::Index row = idx(i, j);
      triplets.emplace_back(row, row, 2.0 * (cR + cZ));
      const std::pair<std::size_t, std::size_t> nbrs[4] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (int n = 0; n < 4; ++n) {
        const auto [a, b] = nbrs[n];
        const double w = n < 2 ? cR : cZ;
        if (a == 0 || b == 0 || a + 1 == nR || b + 1 == nZ) {
          rhs[row] += w * rep.psi(a, b);
        } else {
          triplets.emplace_back(row, idx(a, b), -w);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> A(rhs.size(), rhs.size());
  A.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
  if (solver.info() != Eigen::Success) throw SolverError("Laplace factorization failed");
  const Eigen::VectorXd x = solver.solve(rhs);
  if (solver.info() != Eigen::Success) throw SolverError("Laplace solve failed");
  for (std::size_t i = 1; i + 1 < nR; ++i) {
    for (std::size_t j = 1; j + 1 < nZ; ++j) rep.psi(i, j) = x[idx(i, j)];
  }

  double scale = 1.0;
  for (double v : rep.psi.data()) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 1; i + 1 < nR; ++i) {
    for (std::size_t j = 1; j + 1 < nZ; ++j) {
      const double lap = cR * (rep.psi(i - 1, j) - 2 * rep.psi(i, j) + rep.psi(i + 1, j)) +
                         cZ * (rep.psi(i, j - 1) - 2 * rep.psi(i, j) + rep.psi(i, j + 1));
      rep.solve_residual = std::max(rep.solve_residual, std::abs(lap));
    }
  }
  if (rep.solve_residual > 1e-8 * scale * (cR + cZ)) {
    throw SolverError("Laplace residual " + std::to_string(rep.solve_residual) + " above tolerance");
  }

  std::vector<double> xs, ys;
  xs.reserve(rep.psi.size());
  ys.reserve(rep.psi.size());
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) {
      xs.push_back(grid.R(i));
      ys.push_back(rep.psi(i, j));
    }
  }
  fit_affine(xs, ys, rep.a, rep.b, rep.fit_residual);

  const ScalarField2D dZ = diff_y(rep.psi);
  for (std::size_t i = 0; i < nR; ++i) {
    for (std::size_t j = 0; j < nZ; ++j) {
      if (grid.R(i) >= -options.interior_window && std::abs(grid.Z(j)) <= options.interior_window) {
        rep.interior_dz_max = std::max(rep.interior_dz_max, std::abs(dZ(i, j)));
      }
    }
  }
  return rep;
}

Endgame1dReport psi_endgame_1d(double z_min, double z_max, std::size_t n, double left, double right) {
  if (n < 3 || !(z_min < z_max)) throw DomainError("1D endgame needs n >= 3 and z_min < z_max");
  const double h = (z_max - z_min) / static_cast<double>(n - 1);
  Endgame1dReport rep;
  rep.z.resize(n);
  for (std::size_t k = 0; k < n; ++k) rep.z[k] = z_min + static_cast<double>(k) * h;

  // Thomas algorithm for (ψ_{k−1} − 2ψ_k + ψ_{k+1}) = 0.
  const std::size_t m = n - 2;
  std::vector<double> c(m), d(m);
  for (std::size_t k = 0; k < m; ++k) {
    double rhs = 0.0;
    if (k == 0) rhs -= left;
    if (k + 1 == m) rhs -= right;
    const double denom = -2.0 - (k > 0 ? c[k - 1] : 0.0);
    c[k] = 1.0 / denom;
    d[k] = (rhs - (k > 0 ? d[k - 1] : 0.0)) / denom;
  }
  rep.psi.assign(n, 0.0);
  rep.psi.front() = left;
  rep.psi.back() = right;
  for (std::size_t k = m; k-- > 0;) rep.psi[k + 1] = d[k] - c[k] * (k + 1 < m ? rep.psi[k + 2] : 0.0);

  fit_affine(rep.z, rep.psi, rep.a, rep.b, rep.fit_residual);
  return rep;
}

}  // namespace ssblow::rigidity
