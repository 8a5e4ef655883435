// Reference implementations. These define the canonical results; the vector
// backends must reproduce them bit for bit.

#include <cmath>
#include <limits>

#include "pairwise.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso::kernels {

namespace {

double dot_leaf(const double* w, const double* x, std::size_t n) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] = acc[j] + w[i + j] * x[i + j];
  }
  const std::size_t rem = n - i;
  if (rem > 0) {
    // zero padding, exactly as a masked vector load would see it
    for (std::size_t j = 0; j < kLanes; ++j) {
      const double p = j < rem ? w[i + j] * x[i + j] : 0.0 * 0.0;
      acc[j] = acc[j] + p;
    }
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double sum_leaf(const double* x, std::size_t n) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] = acc[j] + x[i + j];
  }
  const std::size_t rem = n - i;
  if (rem > 0) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] = acc[j] + (j < rem ? x[i + j] : 0.0);
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

// Same selection rule as minpd: a < b ? a : b.
inline double lane_min(double a, double b) { return a < b ? a : b; }

double min_value_scalar(const double* x, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double acc[kLanes] = {inf, inf, inf, inf};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] = lane_min(acc[j], x[i + j]);
  }
  for (std::size_t j = 0; i + j < n; ++j) acc[j] = lane_min(acc[j], x[i + j]);
  return lane_min(lane_min(acc[0], acc[1]), lane_min(acc[2], acc[3]));
}

double dot_scalar(const double* w, const double* x, std::size_t n) {
  return detail::pairwise_dot(dot_leaf, w, x, n);
}

double sum_scalar(const double* x, std::size_t n) { return detail::pairwise_sum(sum_leaf, x, n); }

void log_curvature_scalar(const double* f, const double* f1, const double* f2, double* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double r = f1[i] / f[i];
    out[i] = f2[i] / f[i] - r * r;
  }
}

void area_density_scalar(const double* mu, const double* warp, const double* grad_sq, double* out,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mu[i] * std::sqrt(1.0 + grad_sq[i] / (warp[i] * warp[i]));
  }
}

void profile_gap_scalar(const double* mu, const double* integral, const double* growth,
                        double* profile, double* gap, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double p = mu[i] / integral[i];
    profile[i] = p;
    gap[i] = growth[i] - p;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      Backend::scalar,      "scalar",          dot_scalar,        sum_scalar, min_value_scalar,
      log_curvature_scalar, area_density_scalar, profile_gap_scalar,
  };
  return table;
}

}  // namespace warpiso::kernels
