#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssblow {

/// Pairwise (tree) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Sum of squared residuals.
  double ssr = 0.0;
};

/// Ordinary least squares y ≈ slope*x + intercept. Needs at least two
/// distinct x values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace ssblow
