#pragma once

// Second-order forward-mode jets in N variables. Test-only: used as an
// oracle that differentiates closed forms without any hand chain rule.

#include <array>
#include <cmath>

namespace ssblow::oracle {

template <class T, int N>
struct Jet {
  T v{0};
  std::array<T, N> g{};
  std::array<std::array<T, N>, N> h{};

  Jet() {
    g.fill(T(0));
    for (auto& row : h) row.fill(T(0));
  }
  Jet(const T& value) : Jet() { v = value; }  // NOLINT: constants promote

  static Jet variable(const T& value, int index) {
    Jet j(value);
    j.g[index] = T(1);
    return j;
  }

  /// f(x) given f, f', f'' at the current value.
  Jet apply(const T& f, const T& df, const T& d2f) const {
    Jet out(f);
    for (int i = 0; i < N; ++i) out.g[i] = df * g[i];
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) out.h[i][k] = d2f * g[i] * g[k] + df * h[i][k];
    return out;
  }

  friend Jet operator+(Jet a, const Jet& b) {
    a.v += b.v;
    for (int i = 0; i < N; ++i) {
      a.g[i] += b.g[i];
      for (int k = 0; k < N; ++k) a.h[i][k] += b.h[i][k];
    }
    return a;
  }
  friend Jet operator-(const Jet& a) {
    Jet o = a;
    o.v = -o.v;
    for (int i = 0; i < N; ++i) {
      o.g[i] = -o.g[i];
      for (int k = 0; k < N; ++k) o.h[i][k] = -o.h[i][k];
    }
    return o;
  }
  friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet o(a.v * b.v);
    for (int i = 0; i < N; ++i) o.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k)
        o.h[i][k] = a.h[i][k] * b.v + a.g[i] * b.g[k] + a.g[k] * b.g[i] + a.v * b.h[i][k];
    return o;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    const T inv = T(1) / b.v;
    return a * b.apply(inv, -inv * inv, T(2) * inv * inv * inv);
  }
};

template <class T, int N>
Jet<T, N> exp(const Jet<T, N>& a) {
  using std::exp;
  const T e = exp(a.v);
  return a.apply(e, e, e);
}

template <class T, int N>
Jet<T, N> sin(const Jet<T, N>& a) {
  using std::cos;
  using std::sin;
  const T s = sin(a.v);
  return a.apply(s, cos(a.v), -s);
}

template <class T, int N>
Jet<T, N> cos(const Jet<T, N>& a) {
  using std::cos;
  using std::sin;
  const T c = cos(a.v);
  return a.apply(c, -sin(a.v), -c);
}

/// a^p for a > 0 and real p.
template <class T, int N>
Jet<T, N> pow(const Jet<T, N>& a, const T& p) {
  using std::pow;
  const T f = pow(a.v, p);
  return a.apply(f, p * f / a.v, p * (p - T(1)) * f / (a.v * a.v));
}

}  // namespace ssblow::oracle
