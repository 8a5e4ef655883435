#include "warpiso/mu_integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "warpiso/errors.hpp"
#include "warpiso/quadrature.hpp"

namespace warpiso {

namespace {

constexpr std::size_t kTablePanels = 64;

double int_power(double x, int k) {
  double result = 1.0;
  double base = x;
  bool first = true;
  for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
    if (e & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    if (e > 1) base *= base;
  }
  return result;
}

}  // namespace

MuIntegral::MuIntegral(WarpingFunction wf, int k, double base, double tol_quad)
    : wf_(std::move(wf)), k_(k), base_(base), tol_quad_(tol_quad) {
  if (k_ < 1) throw std::invalid_argument("fiber dimension k must be at least 1");
  if (!(tol_quad_ > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (!(base_ >= 0.0 && base_ < wf_.domain_max())) {
    throw std::invalid_argument("floor height b must lie inside [0, domain_max)");
  }
  height_max_ = wf_.domain_max() - base_;
  base_value_ = wf_.value(base_);
  if (!(base_value_ > 0.0)) {
    throw DomainError("warping function is not positive at the floor height", wf_.source());
  }

  const double panel_tol = tol_quad_ / (2.0 * static_cast<double>(kTablePanels));
  table_.reserve(kTablePanels + 1);
  table_.push_back({0.0, 0.0});
  double running = 0.0;
  for (std::size_t j = 1; j <= kTablePanels; ++j) {
    const double h = j == kTablePanels
                         ? height_max_
                         : height_max_ * static_cast<double>(j) / static_cast<double>(kTablePanels);
    running += integrate_mu(table_.back().h, h, panel_tol);
    table_.push_back({h, running});
  }
}

double MuIntegral::mu(double t) const {
  const double ratio = wf_.value(base_ + t) / base_value_;
  return int_power(ratio, k_);
}

Jet2 MuIntegral::warp(double t) const { return wf_.eval2(base_ + t); }

double MuIntegral::growth(double t) const {
  const Jet2 j = warp(t);
  return static_cast<double>(k_) * j.d1 / j.v;
}

double MuIntegral::integrate_mu(double a, double b) const {
  return integrate_mu(a, b, tol_quad_);
}

double MuIntegral::integrate_mu(double a, double b, double tol) const {
  if (!(a >= 0.0 && a <= height_max_ && b >= 0.0 && b <= height_max_)) {
    throw RangeError("integration limits outside [0, " + std::to_string(height_max_) + "]");
  }
  auto integrand = [this](double t) { return mu(t); };
  return integrate_adaptive(integrand, a, b, tol).value;
}

std::size_t MuIntegral::panel_of(double h) const {
  auto it = std::upper_bound(table_.begin(), table_.end(), h,
                             [](double x, const TablePoint& p) { return x < p.h; });
  const auto idx = static_cast<std::size_t>(std::distance(table_.begin(), it));
  return std::min(idx == 0 ? 0 : idx - 1, table_.size() - 2);
}

double MuIntegral::I(double h) const {
  if (!(h >= 0.0 && h <= height_max_)) {
    throw RangeError("height " + std::to_string(h) + " outside [0, " +
                     std::to_string(height_max_) + "]");
  }
  if (h == 0.0) return 0.0;
  const std::size_t j = panel_of(h);
  return table_[j].integral + integrate_mu(table_[j].h, h, 0.5 * tol_quad_);
}

double MuIntegral::invert_I(double target) const {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double top = I_max();
  if (!(target >= 0.0) || target > top + tol_quad_ * (1.0 + top)) {
    throw RangeError("target volume " + std::to_string(target) +
                     " outside the range of I on the working interval [0, " +
                     std::to_string(top) + "]");
  }
  if (target == 0.0) return 0.0;
  if (target >= top) return height_max_;

  auto it = std::upper_bound(table_.begin(), table_.end(), target,
                             [](double x, const TablePoint& p) { return x < p.integral; });
  const std::size_t j =
      std::min(static_cast<std::size_t>(std::distance(table_.begin(), it)) - 1, table_.size() - 2);
  const TablePoint& left = table_[j];
  const TablePoint& right = table_[j + 1];

  // Residual relative to the panel start; I' = mu > 0 makes it increasing.
  auto residual = [&](double h) {
    return left.integral + integrate_mu(left.h, h, 0.5 * tol_quad_) - target;
  };

  double lo = left.h;
  double hi = right.h;
  const double span = right.integral - left.integral;
  double h = span > 0.0 ? lo + (hi - lo) * ((target - left.integral) / span) : 0.5 * (lo + hi);
  h = std::clamp(h, lo, hi);

  for (int iter = 0; iter < 200; ++iter) {
    const double r = residual(h);
    if (r == 0.0) break;
    if (r > 0.0) {
      hi = h;
    } else {
      lo = h;
    }
    double next = h - r / mu(h);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool done = std::fabs(next - h) <= 2.0 * kEps * std::max(1.0, std::fabs(h)) ||
                      hi - lo <= 2.0 * kEps * std::max(1.0, std::fabs(h));
    h = next;
    if (done) break;
  }

  const double achieved = std::fabs(I(h) - target);
  if (achieved > tol_quad_ * (1.0 + target)) {
    throw ConvergenceError("inversion of I did not reach tolerance", achieved);
  }
  return h;
}

}  // namespace warpiso
