#pragma once

#include <cstddef>
#include <span>

namespace warpiso::kernels {

// Data-parallel inner loops behind the volume, area, certification and
// profile computations.
//
// Every backend implements the same canonical evaluation order: reductions
// are pairwise over blocks of at most kLeafSize elements, and inside a block
// four striped lanes accumulate independently and are combined as
// (l0 + l1) + (l2 + l3). No fused multiply-add is used anywhere, so the
// scalar and vector backends produce bit-identical results.

inline constexpr std::size_t kLanes = 4;
inline constexpr std::size_t kLeafSize = 64;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  const char* name;

  double (*dot)(const double* w, const double* x, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*min_value)(const double* x, std::size_t n);
  // out = f2/f - (f1/f)^2, the second derivative of log f.
  void (*log_curvature)(const double* f, const double* f1, const double* f2, double* out,
                        std::size_t n);
  // out = mu * sqrt(1 + grad_sq / (warp * warp)), the graph area density.
  void (*area_density)(const double* mu, const double* warp, const double* grad_sq, double* out,
                       std::size_t n);
  // profile = mu / integral; gap = growth - profile.
  void (*profile_gap)(const double* mu, const double* integral, const double* growth,
                      double* profile, double* gap, std::size_t n);
};

const KernelTable& scalar_table();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_table();

/// Backend chosen once at first use: AVX2 when available, unless the
/// environment variable WARPISO_KERNELS=scalar forces the reference path.
const KernelTable& active();

double dot(std::span<const double> w, std::span<const double> x);
double sum(std::span<const double> x);
double min_value(std::span<const double> x);
void log_curvature(std::span<const double> f, std::span<const double> f1,
                   std::span<const double> f2, std::span<double> out);
void area_density(std::span<const double> mu, std::span<const double> warp,
                  std::span<const double> grad_sq, std::span<double> out);
void profile_gap(std::span<const double> mu, std::span<const double> integral,
                 std::span<const double> growth, std::span<double> profile, std::span<double> gap);

}  // namespace warpiso::kernels
