#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "warpiso/config.hpp"
#include "warpiso/dido.hpp"
#include "warpiso/geometry.hpp"
#include "warpiso/mu_integral.hpp"
#include "warpiso/warping.hpp"

namespace warpiso::app {

/// Process exit codes; a stable contract of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // usage, parse or I/O problem
  kCertification = 2,  // f failed positivity or log-convexity
  kViolation = 3,      // inequality violated (a bug indicator) or repro signature mismatch
  kPrecondition = 4,   // e.g. bounded f for omega, room too tall, no Dido solution
};

WarpingFunction build_warping(const RunConfig& config);

/// run.k if set, else 1 for interval/circle, 2 for rectangle, and
/// floor.dimension for weighted cells.
int fiber_dimension(const RunConfig& config);

/// Grid floors get weights scaled by f(b)^k.
Floor build_floor(const RunConfig& config, const WarpingFunction& wf, int k);

Ceiling build_ceiling(const RunConfig& config, const Floor& floor, double height_max);

/// i.i.d. uniform heights on [0, 0.8 * height_max], reproducible from seed on
/// every platform (53-bit mantissa draw from mt19937_64).
std::vector<double> random_heights(std::uint64_t seed, std::size_t count, double height_max);

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_omega(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dido(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Configuration of a named example preset (ex1 ... ex3; ex4 has two).
std::vector<RunConfig> repro_presets(std::string_view name);

struct ReproResult {
  std::string name;
  bool pass = false;
  std::size_t critical_point_count = 0;
  std::optional<double> omega;
  std::optional<double> plateau;
  bool unique_global_min = false;
  bool strictly_decreasing = false;
  std::vector<int> omega_exit_codes;  // ex4: one per preset
  std::string report;                 // key=value lines
};

ReproResult run_repro(std::string_view name);
int cmd_repro(std::string_view name, std::ostream& out, std::ostream& err);

/// Full command line: warpiso <check|verify|omega|profile|dido|repro> ...
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace warpiso::app
