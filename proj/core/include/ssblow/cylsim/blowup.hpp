#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ssblow/cylsim/grid.hpp"
#include "ssblow/numeric.hpp"
#include "ssblow/rigidity/window.hpp"

namespace ssblow::cylsim {

/// Bounding box of the nodes where |ω₁| ≥ max|ω₁|/2.
struct WindowBox {
  double r_min = 0.0;
  double r_max = 0.0;
  double z_min = 0.0;
  double z_max = 0.0;
};

/// Throws DomainError if ω₁ vanishes identically.
WindowBox vorticity_window(const ScalarField2D& omega1, const CylGrid& grid);

/// Smallest δ with the box inside 1 − δ ≤ r ≤ 1, |z| ≤ δ.
double window_extent(const WindowBox& box);

struct BlowupSample {
  double t = 0.0;
  double max_omega = 0.0;
  double max_u = 0.0;
  double delta = 0.0;
  WindowBox box;
};

BlowupSample sample_blowup(const CylState& state, const CylGrid& grid);

/// Samples in time order.
struct BlowupSeries {
  std::vector<BlowupSample> samples;
};

struct BlowupFitOptions {
  /// γ the window is judged against; defaults to the fitted one.
  std::optional<double> reference_gamma;
  double window_threshold = 0.05;
};

struct BlowupFit {
  double T = 0.0;
  /// False when the best T sits at the end of the search range, i.e. the
  /// data show no finite blow-up time.
  bool T_bracketed = true;
  double gamma = 0.0;
  /// Slope of log max|ω₁| against log(T − t); −1 for the ansatz.
  double omega_exponent = 0.0;
  LinearFit omega_fit;
  LinearFit delta_fit;
  rigidity::WindowVerdict window;
};

/// Needs ≥ 6 samples with strictly increasing t and max|ω₁|; otherwise
/// throws FitRejected.
BlowupFit track_blowup(const BlowupSeries& series, const BlowupFitOptions& options = {});

}  // namespace ssblow::cylsim
