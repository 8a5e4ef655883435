// AVX2 backend. Compiled with -mavx2 only (no FMA) so products and sums round
// exactly like the scalar reference.

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "pairwise.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso::kernels {

namespace {

__m256i tail_mask(std::size_t rem) {
  const __m256i lane = _mm256_set_epi64x(3, 2, 1, 0);
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(static_cast<long long>(rem)), lane);
}

double combine(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double dot_leaf(const double* w, const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
  }
  if (i < n) {
    const __m256i mask = tail_mask(n - i);
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_maskload_pd(w + i, mask), _mm256_maskload_pd(x + i, mask)));
  }
  return combine(acc);
}

double sum_leaf(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  if (i < n) acc = _mm256_add_pd(acc, _mm256_maskload_pd(x + i, tail_mask(n - i)));
  return combine(acc);
}

double dot_avx2(const double* w, const double* x, std::size_t n) {
  return detail::pairwise_dot(dot_leaf, w, x, n);
}

double sum_avx2(const double* x, std::size_t n) { return detail::pairwise_sum(sum_leaf, x, n); }

double min_value_avx2(const double* x, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  __m256d acc = _mm256_set1_pd(inf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; i + j < n; ++j) lanes[j] = lanes[j] < x[i + j] ? lanes[j] : x[i + j];
  const double a = lanes[0] < lanes[1] ? lanes[0] : lanes[1];
  const double b = lanes[2] < lanes[3] ? lanes[2] : lanes[3];
  return a < b ? a : b;
}

void log_curvature_avx2(const double* f, const double* f1, const double* f2, double* out,
                        std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d vf = _mm256_loadu_pd(f + i);
    const __m256d r = _mm256_div_pd(_mm256_loadu_pd(f1 + i), vf);
    const __m256d q = _mm256_div_pd(_mm256_loadu_pd(f2 + i), vf);
    _mm256_storeu_pd(out + i, _mm256_sub_pd(q, _mm256_mul_pd(r, r)));
  }
  for (; i < n; ++i) {
    const double r = f1[i] / f[i];
    out[i] = f2[i] / f[i] - r * r;
  }
}

void area_density_avx2(const double* mu, const double* warp, const double* grad_sq, double* out,
                       std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d w = _mm256_loadu_pd(warp + i);
    const __m256d ratio = _mm256_div_pd(_mm256_loadu_pd(grad_sq + i), _mm256_mul_pd(w, w));
    const __m256d root = _mm256_sqrt_pd(_mm256_add_pd(one, ratio));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(mu + i), root));
  }
  for (; i < n; ++i) out[i] = mu[i] * __builtin_sqrt(1.0 + grad_sq[i] / (warp[i] * warp[i]));
}

void profile_gap_avx2(const double* mu, const double* integral, const double* growth,
                      double* profile, double* gap, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d p = _mm256_div_pd(_mm256_loadu_pd(mu + i), _mm256_loadu_pd(integral + i));
    _mm256_storeu_pd(profile + i, p);
    _mm256_storeu_pd(gap + i, _mm256_sub_pd(_mm256_loadu_pd(growth + i), p));
  }
  for (; i < n; ++i) {
    const double p = mu[i] / integral[i];
    profile[i] = p;
    gap[i] = growth[i] - p;
  }
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table{
      Backend::avx2,      "avx2",          dot_avx2,        sum_avx2, min_value_avx2,
      log_curvature_avx2, area_density_avx2, profile_gap_avx2,
  };
  return &table;
}

}  // namespace warpiso::kernels
