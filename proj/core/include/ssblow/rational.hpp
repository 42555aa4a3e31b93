#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace ssblow {

/// Exact arbitrary-precision rational.
using Rational = mpq_class;

/// Parses "p/q", "-p", or a finite decimal such as "2.91" (exactly 291/100).
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

/// Converts an exact rational into a floating type. Types that are not
/// builtin floating point go through decimal strings, which keeps
/// multiprecision scalars exact to their own precision.
template <class T>
T rational_to(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(q.get_d());
  } else {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

}  // namespace ssblow
