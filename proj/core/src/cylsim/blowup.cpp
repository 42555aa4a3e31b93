#include "ssblow/cylsim/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

WindowBox vorticity_window(const ScalarField2D& omega1, const CylGrid& grid) {
  if (!grid.matches(omega1)) throw DomainError("vorticity does not live on the grid");
  const double peak = omega1.max_abs();
  if (!(peak > 0.0)) throw DomainError("vorticity vanishes; the window is undefined");
  WindowBox box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < grid.nr; ++i) {
    for (std::size_t j = 0; j < grid.nz; ++j) {
      if (std::abs(omega1(i, j)) < 0.5 * peak) continue;
      box.r_min = std::min(box.r_min, grid.r(i));
      box.r_max = std::max(box.r_max, grid.r(i));
      box.z_min = std::min(box.z_min, grid.z(j));
      box.z_max = std::max(box.z_max, grid.z(j));
    }
  }
  return box;
}

double window_extent(const WindowBox& box) {
  return std::max({1.0 - box.r_min, std::abs(box.z_min), std::abs(box.z_max)});
}

BlowupSample sample_blowup(const CylState& state, const CylGrid& grid) {
  BlowupSample s;
  s.t = state.t;
  s.max_omega = state.omega1.max_abs();
  s.max_u = state.u1.max_abs();
  s.box = vorticity_window(state.omega1, grid);
  s.delta = window_extent(s.box);
  return s;
}

namespace {

LinearFit log_fit(std::span<const BlowupSample> samples, double T, double BlowupSample::*value) {
  std::vector<double> x, y;
  x.reserve(samples.size());
  y.reserve(samples.size());
  for (const auto& s : samples) {
    x.push_back(std::log(T - s.t));
    y.push_back(std::log(s.*value));
  }
  return fit_line(x, y);
}

}  // namespace

BlowupFit track_blowup(const BlowupSeries& series, const BlowupFitOptions& options) {
  const auto& samples = series.samples;
  if (samples.size() < 6) throw FitRejected("need at least 6 samples, got " + std::to_string(samples.size()));
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    if (!(s.max_omega > 0.0) || !(s.delta > 0.0)) throw FitRejected("samples must be positive");
    if (k == 0) continue;
    if (!(s.t > samples[k - 1].t)) throw FitRejected("times are not strictly increasing");
    if (!(s.max_omega > samples[k - 1].max_omega)) throw FitRejected("max|omega1| is not strictly increasing");
  }

  const double t_last = samples.back().t;
  const double span = t_last - samples.front().t;
  auto cost = [&](double gap) { return log_fit(samples, t_last + gap, &BlowupSample::max_omega).ssr; };

  // Coarse log scan of the gap T − t_last, then golden section around the best.
  constexpr int kScan = 121;
  std::vector<double> gaps(kScan), costs(kScan);
  int best = 0;
  for (int k = 0; k < kScan; ++k) {
    gaps[k] = span * std::pow(10.0, -9.0 + 10.0 * k / (kScan - 1));
    costs[k] = cost(gaps[k]);
    if (costs[k] < costs[best]) best = k;
  }
  double lo = gaps[std::max(best - 1, 0)];
  double hi = gaps[std::min(best + 1, kScan - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
  double fa = cost(a), fb = cost(b);
  for (int it = 0; it < 300 && hi - lo > 1e-15 * (t_last + hi); ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = cost(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = cost(b);
    }
  }

  BlowupFit fit;
  fit.T = t_last + 0.5 * (lo + hi);
  fit.T_bracketed = best > 0 && best < kScan - 1;
  fit.omega_fit = log_fit(samples, fit.T, &BlowupSample::max_omega);
  fit.omega_exponent = fit.omega_fit.slope;
  fit.delta_fit = log_fit(samples, fit.T, &BlowupSample::delta);
  fit.gamma = fit.delta_fit.slope;

  std::vector<std::pair<double, double>> window;
  window.reserve(samples.size());
  for (const auto& s : samples) window.emplace_back(s.t, s.delta);
  fit.window = rigidity::window_classify(window, fit.T, options.reference_gamma.value_or(fit.gamma),
                                         options.window_threshold);
  return fit;
}

}  // namespace ssblow::cylsim
