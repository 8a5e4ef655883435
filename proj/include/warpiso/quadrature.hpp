#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod nodes on [-1, 1] (positive half, descending) with the
// embedded 7-point Gauss rule on the odd-indexed nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double magnitude;  // integral of |f|, for the roundoff floor
};

template <class F>
Panel gauss_kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double magnitude = kKronrodWeights[7] * std::fabs(fc);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodWeights[j] * (f1 + f2);
    magnitude += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double width = std::fabs(half);
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half), magnitude * width};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature with interval bisection.
///
/// The error of each panel is estimated by |K15 - G7|. The panel with the
/// largest estimate is bisected until the summed estimate is below abs_tol,
/// or below the roundoff floor 50 * eps * integral(|f|) when abs_tol is not
/// representable at the magnitude of the integrand. Panel values are summed
/// pairwise in left-to-right order. Reversed limits give the negated integral.
///
/// Throws ConvergenceError when max_panels is exhausted; the exception
/// carries the achieved error estimate.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_panels = 4000) {
  if (a == b) return {0.0, 0.0, 0};
  if (b < a) {
    QuadratureResult r = integrate_adaptive(f, b, a, abs_tol, max_panels);
    r.value = -r.value;
    return r;
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<detail::Panel> panels;
  panels.push_back(detail::gauss_kronrod15(f, a, b));

  for (;;) {
    double error = 0.0;
    double magnitude = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      error += panels[i].error;
      magnitude += panels[i].magnitude;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double target = std::max(abs_tol, 50.0 * kEps * magnitude);
    if (error <= target) break;

    const detail::Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (panels.size() >= max_panels || !(mid > p.a && mid < p.b)) {
      throw ConvergenceError("adaptive quadrature did not reach tolerance " +
                                 std::to_string(abs_tol) + " (achieved " +
                                 std::to_string(error) + ")",
                             error);
    }
    panels[worst] = detail::gauss_kronrod15(f, p.a, mid);
    panels.push_back(detail::gauss_kronrod15(f, mid, p.b));
  }

  std::sort(panels.begin(), panels.end(),
            [](const detail::Panel& l, const detail::Panel& r) { return l.a < r.a; });
  std::vector<double> values(panels.size());
  double error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    values[i] = panels[i].value;
    error += panels[i].error;
  }
  return {kernels::sum(values), error, panels.size()};
}

}  // namespace warpiso
