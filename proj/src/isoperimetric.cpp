#include "warpiso/isoperimetric.hpp"

#include <algorithm>
#include <cmath>

#include "warpiso/errors.hpp"
#include "warpiso/kernels.hpp"
#include "warpiso/quadrature.hpp"

namespace warpiso {

namespace {

constexpr double kChainSlack = 1e-10;
constexpr double kHeightMatch = 1e-8;

// int_0^h k (log f)'(b + t) mu(t) dt, evaluated by quadrature.
double divergence_column(const MuIntegral& m, double h) {
  auto integrand = [&m](double t) { return m.growth(t) * m.mu(t); };
  return integrate_adaptive(integrand, 0.0, h, m.tol_quad()).value;
}

}  // namespace

const char* to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::none: return "none";
    case EqualityCase::exact_constant: return "exact_constant";
    case EqualityCase::log_linear_equality: return "log_linear_equality";
  }
  return "none";
}

double solve_constant_height(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m) {
  const double vol_floor = floor_volume(floor);
  const double vol_room = room_volume(floor, ceiling, m);
  if (vol_room > vol_floor * m.I_max() * (1.0 + m.tol_quad())) {
    throw RangeError("room volume exceeds what the working interval can hold over this floor");
  }
  return m.invert_I(std::min(vol_room / vol_floor, m.I_max()));
}

IsoperimetricReport verify(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                           const VerifyOptions& options) {
  IsoperimetricReport r;
  r.tol_verify = options.tol_verify;
  r.vol_floor = floor_volume(floor);
  r.vol_room = room_volume(floor, ceiling, m);
  r.H = solve_constant_height(floor, ceiling, m);
  r.vol_S = r.vol_floor * m.mu(r.H);
  r.vol_C_vertical = ceiling_area(floor, ceiling, m, AreaMode::vertical);
  if (floor.is_grid()) r.vol_C_full = ceiling_area(floor, ceiling, m, AreaMode::full);
  r.margin = r.vol_C_vertical - r.vol_S;

  const WarpingFunction& wf = m.warping();
  const CertificationReport whole = certify(wf, options.certification_grid);
  r.log_convex = whole.log_convex;
  if (!whole.log_convex) {
    r.warnings.push_back(whole.failure ? "certification failed: " + *whole.failure
                                       : "warping function is not log-convex on the working "
                                         "interval; inequality not asserted");
  }

  const double top = m.base() + std::max(ceiling.max_height(), r.H);
  const CertificationReport used = certify_range(wf, m.base(), top, options.certification_grid);
  r.strict_f = used.strictly_log_convex;
  r.equality = diagnose_equality(r, ceiling, used);
  return r;
}

EqualityCase diagnose_equality(const IsoperimetricReport& report, const Ceiling& ceiling,
                               const CertificationReport& certification) {
  const auto heights = ceiling.heights();
  const bool all_at_H = std::all_of(heights.begin(), heights.end(), [&](double h) {
    return std::fabs(h - report.H) <= kHeightMatch * (1.0 + report.H);
  });
  if (all_at_H) return EqualityCase::exact_constant;
  if (report.margin <= report.tol_verify && !certification.strictly_log_convex) {
    return EqualityCase::log_linear_equality;
  }
  return EqualityCase::none;
}

CalibrationResult calibration_check(const Floor& floor, const Ceiling& ceiling,
                                    const MuIntegral& m) {
  CalibrationResult c;
  const double vol_floor = floor_volume(floor);
  const double H = solve_constant_height(floor, ceiling, m);

  c.div_B = vol_floor * divergence_column(m, H);
  c.flux_B = vol_floor * m.mu(H) - vol_floor;
  c.gap_B = std::fabs(c.div_B - c.flux_B);

  const auto samples = ceiling.samples(floor);
  std::vector<double> w(samples.size()), column(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    w[i] = samples[i].weight;
    column[i] = divergence_column(m, samples[i].height);
  }
  c.div_R = kernels::dot(w, column);
  c.flux_R = ceiling_area(floor, ceiling, m, AreaMode::vertical) - vol_floor;
  c.gap_R = std::fabs(c.div_R - c.flux_R);
  c.chain_holds = c.div_B <= c.div_R + kChainSlack;
  return c;
}

}  // namespace warpiso
