#include "warpiso/warping.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso {

WarpingFunction::WarpingFunction(Expression expr, std::string source, double domain_max,
                                 std::optional<double> declared_limit)
    : expr_(std::move(expr)),
      source_(std::move(source)),
      domain_max_(domain_max),
      declared_limit_(declared_limit) {
  if (!(domain_max_ > 0.0) || !std::isfinite(domain_max_)) {
    throw std::invalid_argument("domain_max must be positive and finite");
  }
}

WarpingFunction WarpingFunction::parse(std::string_view source, double domain_max,
                                       std::optional<double> declared_limit) {
  return WarpingFunction(Expression::parse(source), std::string(source), domain_max,
                         declared_limit);
}

void WarpingFunction::check_range(double t) const {
  if (!(t >= 0.0 && t <= domain_max_)) {
    throw RangeError("t = " + std::to_string(t) + " outside working interval [0, " +
                     std::to_string(domain_max_) + "]");
  }
}

Jet2 WarpingFunction::eval2(double t) const {
  check_range(t);
  return expr_.jet(t);
}

double WarpingFunction::value(double t) const {
  check_range(t);
  return expr_.value(t);
}

CertificationReport certify(const WarpingFunction& wf, std::size_t grid_points) {
  return certify_range(wf, 0.0, wf.domain_max(), grid_points);
}

CertificationReport certify_range(const WarpingFunction& wf, double lo, double hi,
                                  std::size_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("certification needs at least 2 grid points");
  if (!(lo <= hi)) throw std::invalid_argument("certification range is empty");

  CertificationReport report;
  report.lo = lo;
  report.hi = hi;
  report.grid_points = grid_points;

  std::vector<double> ts(grid_points), f(grid_points), f1(grid_points), f2(grid_points);
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  try {
    for (std::size_t i = 0; i < grid_points; ++i) {
      ts[i] = i + 1 == grid_points ? hi : lo + step * static_cast<double>(i);
      const Jet2 j = wf.eval2(ts[i]);
      f[i] = j.v;
      f1[i] = j.d1;
      f2[i] = j.d2;
    }
  } catch (const Error& e) {
    report.failure = e.what();
    return report;
  }

  report.min_f = kernels::min_value(f);
  for (std::size_t i = 0; i < grid_points; ++i) {
    if (f[i] == report.min_f) {
      report.argmin_f = ts[i];
      break;
    }
  }
  report.positive = report.min_f > 0.0;
  if (!report.positive) return report;

  std::vector<double> curvature(grid_points);
  kernels::log_curvature(f, f1, f2, curvature);
  report.min_log_curvature = kernels::min_value(curvature);
  for (std::size_t i = 0; i < grid_points; ++i) {
    if (curvature[i] == report.min_log_curvature) {
      report.argmin_log_curvature = ts[i];
      break;
    }
  }
  report.log_convex = report.min_log_curvature >= -kLogConvexTolerance;
  report.strictly_log_convex = report.min_log_curvature > kStrictTolerance;
  return report;
}

}  // namespace warpiso
