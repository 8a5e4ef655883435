#include "warpiso/dido.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "warpiso/errors.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso {

namespace {

constexpr double kMergeDistance = 1e-7;

struct ProfileGrid {
  std::vector<double> h;
  std::vector<double> profile;
  std::vector<double> gap;  // growth - profile
  std::vector<double> growth;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

void check_window(const MuIntegral& m, double h_min, double h_max) {
  if (!(h_min > 0.0 && h_min < h_max && h_max <= m.height_max())) {
    throw std::invalid_argument("profile window must satisfy 0 < h_min < h_max <= height_max");
  }
}

ProfileGrid sample_grid(const MuIntegral& m, double h_min, double h_max, std::size_t n) {
  ProfileGrid g;
  g.h = linspace(h_min, h_max, n);
  std::vector<double> mu(n), integral(n);
  g.growth.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = m.mu(g.h[i]);
    integral[i] = m.I(g.h[i]);
    g.growth[i] = m.growth(g.h[i]);
  }
  g.profile.resize(n);
  g.gap.resize(n);
  kernels::profile_gap(mu, integral, g.growth, g.profile, g.gap);
  return g;
}

double profile_at(const MuIntegral& m, double h) { return m.mu(h) / m.I(h); }

double gap_at(const MuIntegral& m, double h) { return m.growth(h) - profile_at(m, h); }

std::vector<CriticalPoint> roots_of_gap(const MuIntegral& m, const ProfileGrid& g, double tol) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<CriticalPoint> out;
  auto record = [&](double h) {
    if (!out.empty() && std::fabs(h - out.back().h) <= kMergeDistance) return;
    out.push_back({h, profile_at(m, h)});
  };

  for (std::size_t i = 0; i < g.h.size(); ++i) {
    if (g.gap[i] == 0.0) {
      record(g.h[i]);
      continue;
    }
    if (i + 1 == g.h.size() || g.gap[i + 1] == 0.0) continue;
    if (std::signbit(g.gap[i]) == std::signbit(g.gap[i + 1])) continue;

    double lo = g.h[i];
    double hi = g.h[i + 1];
    const bool lo_negative = std::signbit(g.gap[i]);
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
      mid = 0.5 * (lo + hi);
      const double d = gap_at(m, mid);
      if (d == 0.0) break;
      if (std::signbit(d) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
      const bool narrow = hi - lo <= tol && std::fabs(d) <= tol;
      if (narrow || hi - lo <= 2.0 * kEps * hi) {
        mid = 0.5 * (lo + hi);
        break;
      }
    }
    record(mid);
  }
  return out;
}

}  // namespace

const char* to_string(OmegaSource s) {
  switch (s) {
    case OmegaSource::first_critical_value: return "first_critical_value";
    case OmegaSource::limit_nf_over_f: return "limit_nf_over_f";
    case OmegaSource::unavailable: return "unavailable";
  }
  return "unavailable";
}

std::vector<ProfileSample> profile(const MuIntegral& m, double h_min, double h_max,
                                   std::size_t samples) {
  check_window(m, h_min, h_max);
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  const ProfileGrid g = sample_grid(m, h_min, h_max, samples);
  std::vector<ProfileSample> out(samples);
  for (std::size_t i = 0; i < samples; ++i) out[i] = {g.h[i], g.profile[i], g.growth[i]};
  return out;
}

std::vector<CriticalPoint> critical_points(const MuIntegral& m, double h_min, double h_max,
                                           std::size_t grid, double tol) {
  check_window(m, h_min, h_max);
  if (grid < 2) throw std::invalid_argument("critical point search needs at least 2 grid points");
  return roots_of_gap(m, sample_grid(m, h_min, h_max, grid), tol);
}

GrowthVerdict growth_verdict(const MuIntegral& m, std::size_t grid) {
  GrowthVerdict v;
  const double top = m.height_max();
  const std::vector<double> hs = linspace(0.9 * top, top, std::max<std::size_t>(grid / 10, 2));
  std::vector<double> growth(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) growth[i] = m.growth(hs[i]);
  v.min_growth_last_decile = kernels::min_value(growth);
  v.f_ratio = m.warp(top).v / m.warp(0.0).v;
  v.unbounded = v.min_growth_last_decile >= kGrowthTolerance && v.f_ratio > 10.0;
  return v;
}

OmegaResult omega(const MuIntegral& m, std::optional<double> declared_limit,
                  const OmegaOptions& options) {
  OmegaResult r;
  r.growth = growth_verdict(m, options.grid);
  if (!r.growth.unbounded && !declared_limit) {
    throw PreconditionError(
        "warping function is not increasing without bound on the working window (min n f'/f on "
        "the last decile " +
        std::to_string(r.growth.min_growth_last_decile) + ", f ratio " +
        std::to_string(r.growth.f_ratio) +
        "); the room volume has no bound in terms of ceiling area");
  }

  const double top = m.height_max();
  const ProfileGrid g = sample_grid(m, options.h_min_fraction * top, top, options.grid);
  r.critical_points = roots_of_gap(m, g, kCriticalTolerance);
  r.plateau = g.growth.back();
  r.min_sampled_profile = kernels::min_value(g.profile);

  if (!r.critical_points.empty()) {
    r.omega = r.critical_points.front().value;
    r.source = OmegaSource::first_critical_value;
  } else if (declared_limit) {
    r.omega = *declared_limit;
    r.source = OmegaSource::limit_nf_over_f;
  } else {
    r.omega = r.plateau;
    r.source = OmegaSource::limit_nf_over_f;
    r.estimate = true;
  }
  if (!(r.omega > 0.0)) {
    throw PreconditionError("omega = " + std::to_string(r.omega) + " is not positive");
  }
  return r;
}

VolumeBound volume_bound_check(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                               double omega, double tol_verify) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  VolumeBound b;
  b.vol_room = room_volume(floor, ceiling, m);
  b.vol_ceiling = ceiling_area(floor, ceiling, m, AreaMode::vertical);
  b.bound = b.vol_ceiling / omega;
  b.ok = b.vol_room <= b.bound + tol_verify;
  return b;
}

DidoSolution dido_solve(const Floor& floor, const MuIntegral& m, double area) {
  if (!(area > 0.0)) throw std::invalid_argument("ceiling area must be positive");
  const double vol_floor = floor_volume(floor);
  const double level = area / vol_floor;  // target value of mu
  const double top = m.height_max();

  constexpr std::size_t kScan = 4097;
  const std::vector<double> hs = linspace(0.0, top, kScan);
  std::vector<double> mu(kScan);
  for (std::size_t i = 0; i < kScan; ++i) mu[i] = m.mu(hs[i]);
  const auto [lo_it, hi_it] = std::minmax_element(mu.begin(), mu.end());
  const double mu_min = *lo_it;
  const double mu_max = *hi_it;

  if (mu_max - mu_min <= 1e-12 * mu_max) {
    if (std::fabs(level - mu_min) <= 1e-12 * mu_max) {
      throw DegenerateEquationError(
          "mu is constant on the working interval: every height has ceiling area A");
    }
    throw NoSolutionError("mu is constant on the working interval and never equals A / Vol(F)");
  }

  // mu is convex: decreasing up to its minimizer, increasing after it.
  const std::size_t imin = static_cast<std::size_t>(std::distance(mu.begin(), lo_it));
  double left = hs[imin == 0 ? 0 : imin - 1];
  double right = hs[std::min(imin + 1, kScan - 1)];
  if (m.growth(left) < 0.0 && m.growth(right) > 0.0) {
    for (int iter = 0; iter < 200 && right - left > 4e-16 * std::max(1.0, right); ++iter) {
      const double mid = 0.5 * (left + right);
      if (m.growth(mid) < 0.0) {
        left = mid;
      } else {
        right = mid;
      }
    }
  }
  const double h_star = imin == 0 ? 0.0 : (imin + 1 == kScan ? top : 0.5 * (left + right));
  const double mu_star = std::min(m.mu(h_star), mu_min);
  if (level < mu_star) {
    throw NoSolutionError("ceiling area " + std::to_string(area) +
                          " is below the smallest constant-ceiling area on the window");
  }

  // Root of mu(h) - level on [a, b] where mu is monotone.
  auto solve_branch = [&](double a, double b, bool increasing) -> std::optional<double> {
    const double ga = m.mu(a) - level;
    const double gb = m.mu(b) - level;
    if (ga == 0.0) return a;
    if (gb == 0.0) return b;
    if (std::signbit(ga) == std::signbit(gb)) return std::nullopt;
    for (int iter = 0; iter < 200 && b - a > 4e-16 * std::max(1.0, b); ++iter) {
      const double mid = 0.5 * (a + b);
      const double gm = m.mu(mid) - level;
      if (gm == 0.0) return mid;
      if ((gm < 0.0) == increasing) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  DidoSolution s;
  if (h_star > 0.0) {
    if (auto h = solve_branch(0.0, h_star, false)) s.solutions.push_back(*h);
  }
  if (h_star < top) {
    if (auto h = solve_branch(h_star, top, true)) {
      if (s.solutions.empty() || std::fabs(*h - s.solutions.back()) > kMergeDistance) {
        s.solutions.push_back(*h);
      }
    }
  }
  if (s.solutions.empty()) {
    throw NoSolutionError("ceiling area " + std::to_string(area) +
                          " is above every constant-ceiling area on the working window");
  }

  double best = -1.0;
  for (double h : s.solutions) {
    const double vol = vol_floor * m.I(h);
    if (vol > best) {
      best = vol;
      s.chosen_h = h;
    }
  }
  s.vol_room = best;
  return s;
}

}  // namespace warpiso
