#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "warpiso/expression.hpp"
#include "warpiso/jet.hpp"

namespace warpiso {

inline constexpr double kLogConvexTolerance = 1e-9;
inline constexpr double kStrictTolerance = 1e-9;
inline constexpr std::size_t kDefaultCertificationGrid = 4096;

/// Warping function f of the product R x_f N on the working interval
/// [0, domain_max]. Immutable after construction, so it may be shared and
/// evaluated from any number of threads.
class WarpingFunction {
 public:
  WarpingFunction(Expression expr, std::string source, double domain_max,
                  std::optional<double> declared_limit = std::nullopt);

  /// Throws ParseError on bad input, std::invalid_argument on a
  /// non-positive domain_max.
  static WarpingFunction parse(std::string_view source, double domain_max,
                               std::optional<double> declared_limit = std::nullopt);

  /// f, f', f'' at t. Throws RangeError outside [0, domain_max] and
  /// DomainError when an elementary function is evaluated off its domain.
  Jet2 eval2(double t) const;
  double value(double t) const;

  const std::string& source() const { return source_; }
  const Expression& expression() const { return expr_; }
  double domain_max() const { return domain_max_; }
  const std::optional<double>& declared_limit() const { return declared_limit_; }

 private:
  void check_range(double t) const;

  Expression expr_;
  std::string source_;
  double domain_max_;
  std::optional<double> declared_limit_;
};

struct CertificationReport {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t grid_points = 0;

  double min_f = 0.0;
  double argmin_f = 0.0;
  double min_log_curvature = 0.0;  // min over the grid of (log f)''
  double argmin_log_curvature = 0.0;

  bool positive = false;
  bool log_convex = false;
  bool strictly_log_convex = false;

  /// Set when evaluation failed at some grid point; all verdicts are false.
  std::optional<std::string> failure;
};

/// Grid check of positivity and logarithmic convexity over [0, domain_max].
/// Failures are verdicts; this never throws on evaluation problems.
CertificationReport certify(const WarpingFunction& wf,
                            std::size_t grid_points = kDefaultCertificationGrid);

/// Same check restricted to [lo, hi] within the working interval.
CertificationReport certify_range(const WarpingFunction& wf, double lo, double hi,
                                  std::size_t grid_points = kDefaultCertificationGrid);

}  // namespace warpiso
