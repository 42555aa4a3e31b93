#include "ssblow/rigidity/window.hpp"

#include <cmath>
#include <vector>

#include "ssblow/errors.hpp"
#include "ssblow/numeric.hpp"

namespace ssblow::rigidity {

std::string_view window_class_name(WindowClass c) {
  switch (c) {
    case WindowClass::ShrinksSelfSimilar:
      return "shrinks_selfsimilar";
    case WindowClass::WiderThanSelfSimilar:
      return "wider_than_selfsimilar";
    case WindowClass::Indeterminate:
      break;
  }
  return "indeterminate";
}

WindowVerdict window_classify(std::span<const std::pair<double, double>> samples, double T, double gamma,
                              double growth_threshold) {
  WindowVerdict v;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto [t, delta] = samples[k];
    if (!(delta > 0)) throw DomainError("window width must be positive");
    if (!(t < T)) throw DomainError("window samples must precede T");
    if (k > 0 && !(t > samples[k - 1].first)) throw DomainError("window sample times must increase");
  }
  if (samples.size() < 4) return v;

  std::vector<double> log_tau, log_delta, log_ratio;
  for (const auto& [t, delta] : samples) {
    const double lt = std::log(T - t);
    log_tau.push_back(lt);
    log_delta.push_back(std::log(delta));
    log_ratio.push_back(std::log(delta) - gamma * lt);
  }
  v.delta_exponent = fit_line(log_tau, log_delta).slope;
  v.ratio_growth = -fit_line(log_tau, log_ratio).slope;
  v.delta_vanishes = v.delta_exponent > growth_threshold;
  v.ratio_first = std::exp(log_ratio.front());
  v.ratio_last = std::exp(log_ratio.back());
  v.tag = v.ratio_growth > growth_threshold ? WindowClass::WiderThanSelfSimilar : WindowClass::ShrinksSelfSimilar;
  return v;
}

}  // namespace ssblow::rigidity
