#pragma once

#include <cstddef>

#include "warpiso/kernels.hpp"

namespace warpiso::kernels::detail {

// Split point shared by all backends; always a multiple of kLanes so the
// lane striping of the left half starts at lane 0.
constexpr std::size_t split_point(std::size_t n) {
  return ((n / 2 + kLanes - 1) / kLanes) * kLanes;
}

template <class Leaf>
double pairwise_dot(Leaf leaf, const double* w, const double* x, std::size_t n) {
  if (n <= kLeafSize) return leaf(w, x, n);
  const std::size_t m = split_point(n);
  return pairwise_dot(leaf, w, x, m) + pairwise_dot(leaf, w + m, x + m, n - m);
}

template <class Leaf>
double pairwise_sum(Leaf leaf, const double* x, std::size_t n) {
  if (n <= kLeafSize) return leaf(x, n);
  const std::size_t m = split_point(n);
  return pairwise_sum(leaf, x, m) + pairwise_sum(leaf, x + m, n - m);
}

}  // namespace warpiso::kernels::detail
