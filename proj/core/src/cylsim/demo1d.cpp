#include "ssblow/cylsim/demo1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssblow/errors.hpp"

namespace ssblow::cylsim {

std::string_view bc1d_name(Bc1d bc) { return bc == Bc1d::Periodic ? "periodic" : "dirichlet"; }

Bc1d parse_bc1d(std::string_view text) {
  if (text == "periodic") return Bc1d::Periodic;
  if (text == "dirichlet") return Bc1d::Dirichlet;
  throw ParseError("unknown boundary condition '" + std::string(text) + "'");
}

namespace {

std::function<double(double)> default_initial(const Demo1dOptions& o) {
  if (o.bc == Bc1d::Periodic) return [](double x) { return std::sin(8.0 * std::atan(1.0) * x); };
  const double A = o.amplitude;
  const double norm = std::sqrt(1.01) - 0.1;
  return [A, norm](double x) { return A * (std::sqrt(x + 0.01) - 0.1) / norm; };
}

}  // namespace

Demo1dReport demo_1d(const Demo1dOptions& o) {
  if (o.n < 8) throw DomainError("demo_1d needs n >= 8");
  if (!(o.t_end > 0.0)) throw DomainError("t_end must be positive");
  const bool periodic = o.bc == Bc1d::Periodic;
  const std::size_t n = o.n;
  const double h = 1.0 / static_cast<double>(n);
  // Periodic: nodes 0..n-1. Dirichlet: nodes 0..n with both ends fixed.
  const std::size_t m = periodic ? n : n + 1;
  const auto init = o.initial ? o.initial : default_initial(o);
  std::vector<double> u(m), next(m);
  for (std::size_t i = 0; i < m; ++i) u[i] = init(static_cast<double>(i) * h);

  auto at = [&](const std::vector<double>& v, std::ptrdiff_t i) {
    const auto mm = static_cast<std::ptrdiff_t>(m);
    return v[static_cast<std::size_t>(((i % mm) + mm) % mm)];
  };
  auto max_gradient = [&] {
    double g = 0.0;
    const std::size_t edges = periodic ? m : m - 1;
    for (std::size_t i = 0; i < edges; ++i)
      g = std::max(g, std::abs(at(u, static_cast<std::ptrdiff_t>(i) + 1) - u[i]) / h);
    return g;
  };

  Demo1dReport rep;
  rep.bc = o.bc;
  rep.n = n;
  double t = 0.0;
  double g = max_gradient();
  rep.peak_ux = g;
  rep.history.push_back({0.0, g});
  const double sample_dt = o.t_end / static_cast<double>(std::max<std::size_t>(o.history_points, 1));
  double next_sample = sample_dt;

  while (t < o.t_end) {
    if (g > o.threshold) {
      rep.blowup_suspected = true;
      rep.crossing_time = t;
      break;
    }
    double dt = 0.4 * h * h;
    if (g > 0.0) dt = std::min(dt, 0.5 * h / (4.0 * g * g * g));
    if (dt < 1e-16 * o.t_end) {
      rep.blowup_suspected = true;
      break;
    }
    dt = std::min({dt, o.t_end - t, next_sample - t});
    const std::size_t first = periodic ? 0 : 1;
    const std::size_t last = periodic ? m : m - 1;
    next = u;
    for (std::size_t i = first; i < last; ++i) {
      const auto ii = static_cast<std::ptrdiff_t>(i);
      const double ul = at(u, ii - 1), ur = at(u, ii + 1);
      const double uxx = (ur - 2.0 * u[i] + ul) / (h * h);
      const double ux = (ur - ul) / (2.0 * h);
      next[i] = u[i] + dt * (uxx - ux * ux * ux * ux);
    }
    u.swap(next);
    t += dt;
    ++rep.steps;
    for (double v : u)
      if (!std::isfinite(v)) throw StabilityError("demo_1d state became non-finite at t = " + std::to_string(t));
    g = max_gradient();
    rep.peak_ux = std::max(rep.peak_ux, g);
    // Fixed cadence, plus extra samples while the gradient grows fast.
    if (t >= next_sample - 1e-15 * o.t_end) {
      rep.history.push_back({t, g});
      next_sample += sample_dt;
    } else if (g > 1.25 * rep.history.back().max_ux) {
      rep.history.push_back({t, g});
    }
  }
  if (rep.history.back().t != t) rep.history.push_back({t, g});
  if (g > o.threshold && !rep.crossing_time) {
    rep.blowup_suspected = true;
    rep.crossing_time = t;
  }
  rep.t_reached = t;
  rep.final_u = std::move(u);
  return rep;
}

}  // namespace ssblow::cylsim
