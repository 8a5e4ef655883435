#pragma once

#include <cmath>

namespace warpiso {

/// Truncated Taylor jet (value, first and second derivative) in one
/// variable. Arithmetic propagates exact derivatives through the chain rule.
struct Jet2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
  static constexpr Jet2 variable(double t) { return {t, 1.0, 0.0}; }

  bool finite() const { return std::isfinite(v) && std::isfinite(d1) && std::isfinite(d2); }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

// Caller guarantees b.v != 0.
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double q = a.v / b.v;
  const double q1 = (a.d1 - q * b.d1) / b.v;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

/// Applies a scalar function g with known g, g', g'' at a.v.
inline Jet2 compose(const Jet2& a, double g0, double g1, double g2) {
  return {g0, g1 * a.d1, g2 * a.d1 * a.d1 + g1 * a.d2};
}

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}

// Caller guarantees a.v > 0.
inline Jet2 log(const Jet2& a) {
  const double inv = 1.0 / a.v;
  return compose(a, std::log(a.v), inv, -inv * inv);
}

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v);
  return compose(a, s, std::cos(a.v), -s);
}

inline Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.v);
  return compose(a, c, -std::sin(a.v), -c);
}

inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.v);
  return compose(a, s, std::cosh(a.v), s);
}

inline Jet2 cosh(const Jet2& a) {
  const double c = std::cosh(a.v);
  return compose(a, c, std::sinh(a.v), c);
}

/// a^c for a constant exponent c. Terms whose coefficient vanishes are
/// skipped so that e.g. t^1 at t = 0 stays finite.
inline Jet2 pow(const Jet2& a, double c) {
  const double p0 = std::pow(a.v, c);
  if (a.d1 == 0.0 && a.d2 == 0.0) return Jet2::constant(p0);
  const double p1 = c == 0.0 ? 0.0 : c * std::pow(a.v, c - 1.0);
  const double p2 = (c == 0.0 || c == 1.0) ? 0.0 : c * (c - 1.0) * std::pow(a.v, c - 2.0);
  return compose(a, p0, p1, p2);
}

}  // namespace warpiso
