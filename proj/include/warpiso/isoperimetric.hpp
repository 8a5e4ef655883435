#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "warpiso/geometry.hpp"
#include "warpiso/mu_integral.hpp"
#include "warpiso/warping.hpp"

namespace warpiso {

inline constexpr double kVerifyTolerance = 1e-8;

enum class EqualityCase { none, exact_constant, log_linear_equality };

const char* to_string(EqualityCase e);

/// Outcome of comparing a ceiling C against the constant-height ceiling S
/// over the same floor that traps the same volume.
struct IsoperimetricReport {
  double vol_room = 0.0;
  double vol_floor = 0.0;
  double H = 0.0;
  double vol_S = 0.0;  // vol_floor * mu(H)
  double vol_C_vertical = 0.0;
  std::optional<double> vol_C_full;
  double margin = 0.0;  // vol_C_vertical - vol_S
  EqualityCase equality = EqualityCase::none;
  bool log_convex = false;
  bool strict_f = false;  // strictly log-convex on the heights the rooms use
  double tol_verify = kVerifyTolerance;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;

  /// The inequality is asserted only for certified log-convex f.
  bool asserted() const { return log_convex; }
  bool violated() const { return asserted() && margin < -tol_verify; }
};

struct VerifyOptions {
  double tol_verify = kVerifyTolerance;
  std::size_t certification_grid = kDefaultCertificationGrid;
};

/// H with Vol(F) I(H) = Vol(R). Throws RangeError when the room is too tall
/// for the working interval.
double solve_constant_height(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m);

IsoperimetricReport verify(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                           const VerifyOptions& options = {});

/// exact_constant when every positive-weight height equals H (C = S up to
/// measure zero); log_linear_equality when the margin vanishes and f is not
/// strictly log-convex on the heights involved; none otherwise.
EqualityCase diagnose_equality(const IsoperimetricReport& report, const Ceiling& ceiling,
                               const CertificationReport& certification);

/// Divergence-theorem identity for the horizontal unit field X, whose
/// divergence is k (log f)'. For the constant room B and the room R it
/// compares the volume integral of div X with the boundary flux, which is
/// Vol(S) - Vol(F) and Vol_vertical(C) - Vol(F) respectively.
struct CalibrationResult {
  double div_B = 0.0;
  double flux_B = 0.0;
  double gap_B = 0.0;
  double div_R = 0.0;
  double flux_R = 0.0;
  double gap_R = 0.0;
  bool chain_holds = false;  // div_B <= div_R + 1e-10
};

CalibrationResult calibration_check(const Floor& floor, const Ceiling& ceiling,
                                    const MuIntegral& m);

}  // namespace warpiso
