#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "warpiso/warping.hpp"

namespace warpiso {

inline constexpr double kDefaultQuadTolerance = 1e-10;

/// Vertical area density mu(t) = (f(b + t) / f(b))^k over a k-dimensional
/// floor sitting at height b, and its integral I(h) = int_0^h mu.
///
/// With b = 0 and f(0) = 1 the normalization is the identity and mu is the
/// plain k-th power of f. Floor weights carry the factor f(b)^k, so
/// weight * mu(h) is the area of a constant ceiling at height h.
///
/// A table of I at evenly spaced heights is built once at construction and
/// never modified afterwards: I(h) is the table entry below h plus one
/// adaptive quadrature over the remainder, and invert_I brackets from it.
/// The object is therefore safe to use concurrently.
class MuIntegral {
 public:
  struct TablePoint {
    double h;
    double integral;
  };

  /// Throws DomainError if mu cannot be evaluated on the whole working
  /// interval, std::invalid_argument on bad k, base or tolerance.
  MuIntegral(WarpingFunction wf, int k, double base = 0.0,
             double tol_quad = kDefaultQuadTolerance);

  /// mu(t) for t in [0, height_max()].
  double mu(double t) const;

  /// f(b + t), f'(b + t), f''(b + t) (unnormalized).
  Jet2 warp(double t) const;

  /// k f'(b + t) / f(b + t), the logarithmic derivative of mu.
  double growth(double t) const;

  /// I(h); I(0) = 0 exactly. Throws RangeError outside [0, height_max()].
  double I(double h) const;

  /// int_a^b mu for 0 <= a, b <= height_max().
  double integrate_mu(double a, double b) const;

  /// h with |I(h) - target| <= tol_quad * (1 + |target|). Throws RangeError
  /// when target lies outside [0, I(height_max())].
  double invert_I(double target) const;

  const WarpingFunction& warping() const { return wf_; }
  int k() const { return k_; }
  double base() const { return base_; }
  double tol_quad() const { return tol_quad_; }
  double height_max() const { return height_max_; }
  double I_max() const { return table_.back().integral; }
  std::span<const TablePoint> table() const { return table_; }

 private:
  std::size_t panel_of(double h) const;
  double integrate_mu(double a, double b, double tol) const;

  WarpingFunction wf_;
  int k_;
  double base_;
  double tol_quad_;
  double height_max_;
  double base_value_;  // f(b)
  std::vector<TablePoint> table_;
};

}  // namespace warpiso
