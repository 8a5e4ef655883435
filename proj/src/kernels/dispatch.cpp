#include <cassert>
#include <cstdlib>
#include <string_view>

#include "warpiso/kernels.hpp"

namespace warpiso::kernels {

#if defined(WARPISO_HAVE_AVX2)
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(WARPISO_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("WARPISO_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* v = avx2_table()) return *v;
    return scalar_table();
  }();
  return chosen;
}

double dot(std::span<const double> w, std::span<const double> x) {
  assert(w.size() == x.size());
  return active().dot(w.data(), x.data(), w.size());
}

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

double min_value(std::span<const double> x) { return active().min_value(x.data(), x.size()); }

void log_curvature(std::span<const double> f, std::span<const double> f1,
                   std::span<const double> f2, std::span<double> out) {
  assert(f.size() == f1.size() && f.size() == f2.size() && f.size() == out.size());
  active().log_curvature(f.data(), f1.data(), f2.data(), out.data(), f.size());
}

void area_density(std::span<const double> mu, std::span<const double> warp,
                  std::span<const double> grad_sq, std::span<double> out) {
  assert(mu.size() == warp.size() && mu.size() == grad_sq.size() && mu.size() == out.size());
  active().area_density(mu.data(), warp.data(), grad_sq.data(), out.data(), mu.size());
}

void profile_gap(std::span<const double> mu, std::span<const double> integral,
                 std::span<const double> growth, std::span<double> profile, std::span<double> gap) {
  assert(mu.size() == integral.size() && mu.size() == growth.size());
  assert(mu.size() == profile.size() && mu.size() == gap.size());
  active().profile_gap(mu.data(), integral.data(), growth.data(), profile.data(), gap.data(),
                       mu.size());
}

}  // namespace warpiso::kernels
