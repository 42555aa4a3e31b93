#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace ssblow::cylsim {

enum class Bc1d { Periodic, Dirichlet };
std::string_view bc1d_name(Bc1d bc);
Bc1d parse_bc1d(std::string_view text);

struct Demo1dOptions {
  Bc1d bc = Bc1d::Periodic;
  std::size_t n = 200;
  double t_end = 1.0;
  /// Right boundary value for Dirichlet runs (u(0) = 0).
  double amplitude = 3.0;
  double threshold = 1e3;
  std::size_t history_points = 200;
  /// Initial data on [0, 1]; defaults to sin(2πx) periodic and a
  /// smoothed A·√x Dirichlet.
  std::function<double(double)> initial;
};

struct Demo1dSample {
  double t = 0.0;
  double max_ux = 0.0;
};

struct Demo1dReport {
  Bc1d bc = Bc1d::Periodic;
  std::size_t n = 0;
  double t_reached = 0.0;
  std::size_t steps = 0;
  /// Every t_end/history_points, and whenever max|u_x| grows by 25%.
  std::vector<Demo1dSample> history;
  double peak_ux = 0.0;
  bool blowup_suspected = false;
  std::optional<double> crossing_time;
  std::vector<double> final_u;
};

/// Explicit finite differences for u_t = u_xx − u_x⁴ on [0, 1]. Throws
/// StabilityError if the state goes non-finite.
Demo1dReport demo_1d(const Demo1dOptions& options);

}  // namespace ssblow::cylsim
