#pragma once

#include <span>
#include <string_view>
#include <utility>

namespace ssblow::rigidity {

enum class WindowClass { ShrinksSelfSimilar, WiderThanSelfSimilar, Indeterminate };
std::string_view window_class_name(WindowClass c);  // "shrinks_selfsimilar", ...

struct WindowVerdict {
  WindowClass tag = WindowClass::Indeterminate;
  /// Exponent q in (T−t)^{−γ}δ(t) ~ (T−t)^{−q}; q > 0 means the ratio grows.
  double ratio_growth = 0.0;
  /// Exponent e in δ(t) ~ (T−t)^{e}.
  double delta_exponent = 0.0;
  /// δ(t) → 0 as t → T (e clearly positive).
  bool delta_vanishes = false;
  double ratio_first = 0.0;
  double ratio_last = 0.0;
};

/// Classifies window samples (t, δ(t)) against the self-similar width
/// (T − t)^γ. Fewer than 4 samples → indeterminate. Throws DomainError for
/// δ ≤ 0, t ≥ T or non-increasing t.
WindowVerdict window_classify(std::span<const std::pair<double, double>> samples, double T, double gamma,
                              double growth_threshold = 0.05);

}  // namespace ssblow::rigidity
