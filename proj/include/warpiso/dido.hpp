#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "warpiso/geometry.hpp"
#include "warpiso/isoperimetric.hpp"
#include "warpiso/mu_integral.hpp"

namespace warpiso {

inline constexpr double kCriticalTolerance = 1e-9;
inline constexpr double kGrowthTolerance = 1e-6;
inline constexpr std::size_t kDefaultCriticalGrid = 4096;

/// One sample of the isoperimetric profile P(h) = mu(h) / I(h), which is
/// also d/dh log I(h) and the ratio Vol(S(h)) / Vol(B(h)) for any floor.
/// growth is n f'(h) / f(h), the logarithmic derivative of mu.
struct ProfileSample {
  double h;
  double profile;
  double growth;
};

struct CriticalPoint {
  double h;
  double value;
};

/// Evenly spaced samples on [h_min, h_max], both ends included.
std::vector<ProfileSample> profile(const MuIntegral& m, double h_min, double h_max,
                                   std::size_t samples);

/// Roots of growth(h) - P(h) on [h_min, h_max], sorted by h. P' = P (growth
/// - P), so these are exactly the critical points of P. Found by sign-change
/// bracketing on `grid` points and bisection; roots closer than 1e-7 merge.
std::vector<CriticalPoint> critical_points(const MuIntegral& m, double h_min, double h_max,
                                           std::size_t grid = kDefaultCriticalGrid,
                                           double tol = kCriticalTolerance);

/// Finite-window stand-in for "f is unbounded on [0, infinity)": growth at
/// least kGrowthTolerance on the last decile of the window and
/// f(end) > 10 f(start).
struct GrowthVerdict {
  bool unbounded = false;
  double min_growth_last_decile = 0.0;
  double f_ratio = 0.0;
};

GrowthVerdict growth_verdict(const MuIntegral& m, std::size_t grid = kDefaultCriticalGrid);

enum class OmegaSource { first_critical_value, limit_nf_over_f, unavailable };

const char* to_string(OmegaSource s);

struct OmegaResult {
  double omega = 0.0;
  OmegaSource source = OmegaSource::unavailable;
  bool estimate = false;  // limit read off the window end rather than declared
  std::vector<CriticalPoint> critical_points;
  double plateau = 0.0;              // growth at the window end
  double min_sampled_profile = 0.0;  // cross-check for the lower bound
  GrowthVerdict growth;
};

struct OmegaOptions {
  std::size_t grid = kDefaultCriticalGrid;
  double h_min_fraction = 1e-3;  // search window starts at this fraction of height_max
};

/// Positive lower bound of the profile: the first critical value, else the
/// declared limit of n f'/f, else its value at the window end (flagged as an
/// estimate). Throws PreconditionError when f is not unbounded on the window
/// and no limit is declared, or when the result is not positive.
OmegaResult omega(const MuIntegral& m, std::optional<double> declared_limit,
                  const OmegaOptions& options = {});

struct VolumeBound {
  double vol_room = 0.0;
  double vol_ceiling = 0.0;  // vertical area
  double bound = 0.0;        // vol_ceiling / omega
  bool ok = false;
};

VolumeBound volume_bound_check(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                               double omega, double tol_verify = kVerifyTolerance);

struct DidoSolution {
  std::vector<double> solutions;  // ascending, at most two
  double chosen_h = 0.0;
  double vol_room = 0.0;
};

/// Largest room over the floor whose constant ceiling has area A: solves
/// Vol(F) mu(h) = A on [0, height_max] (mu is convex, so at most two roots)
/// and keeps the root with the larger Vol(F) I(h). Throws NoSolutionError
/// when A is out of reach on the window, DegenerateEquationError when mu is
/// constant.
DidoSolution dido_solve(const Floor& floor, const MuIntegral& m, double area);

}  // namespace warpiso
