#include "warpiso/app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "warpiso/errors.hpp"
#include "warpiso/isoperimetric.hpp"
#include "warpiso/report.hpp"

namespace warpiso::app {

namespace {

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kCertification;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const RangeError& e) {
    err << "error: range: " << e.what() << '\n';
    return kPrecondition;
  } catch (const NoSolutionError& e) {
    err << "error: no solution: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DegenerateEquationError& e) {
    err << "error: degenerate equation: " << e.what() << '\n';
    return kPrecondition;
  } catch (const UnsupportedModeError& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConvergenceError& e) {
    err << "error: convergence: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kUsage;
  }
}

void write_text(const std::string& path, const std::string& text, bool append_mode = false) {
  std::ofstream file(path, append_mode ? std::ios::app | std::ios::binary : std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << text;
}

struct Instance {
  WarpingFunction wf;
  int k;
  MuIntegral m;
  Floor floor;
};

Instance build_instance(const RunConfig& c) {
  WarpingFunction wf = build_warping(c);
  const int k = fiber_dimension(c);
  MuIntegral m(wf, k, c.floor.base, c.tol_quad);
  Floor floor = build_floor(c, wf, k);
  return {std::move(wf), k, std::move(m), std::move(floor)};
}

std::optional<double> declared_limit(const RunConfig& c) { return c.declared_limit; }

RunConfig preset(std::string expr, int n) {
  RunConfig c;
  c.warping = std::move(expr);
  c.domain_max = 10.0;
  c.k = n;
  return c;
}

}  // namespace

WarpingFunction build_warping(const RunConfig& c) {
  if (c.warping.empty()) throw ConfigError("warping.expr is required");
  return WarpingFunction::parse(c.warping, c.domain_max, c.declared_limit);
}

int fiber_dimension(const RunConfig& c) {
  if (c.k > 0) return c.k;
  if (c.k < 0) throw ConfigError("run.k must be positive");
  if (c.floor.kind == "rectangle") return 2;
  if (c.floor.kind == "weighted_cells") {
    if (c.floor.dimension <= 0) throw ConfigError("floor.dimension is required for weighted_cells");
    return c.floor.dimension;
  }
  return 1;
}

Floor build_floor(const RunConfig& c, const WarpingFunction& wf, int k) {
  const FloorSpec& f = c.floor;
  if (f.kind == "weighted_cells") {
    if (f.weights.empty()) throw ConfigError("floor.weights is required for weighted_cells");
    return Floor::weighted_cells(f.weights, f.dimension > 0 ? f.dimension : k, f.base, f.ids);
  }
  const double scale = std::pow(wf.value(f.base), k);
  if (f.kind == "rectangle") {
    return Floor::rectangle(f.length, f.width, f.resolution_x, f.resolution_y, f.base, scale);
  }
  if (f.kind == "circle") return Floor::circle(f.length, f.resolution_x, f.base, scale);
  return Floor::interval(f.length, f.resolution_x, f.base, scale);
}

std::vector<double> random_heights(std::uint64_t seed, std::size_t count, double height_max) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  const double top = 0.8 * height_max;
  for (double& h : out) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    h = u * top;
  }
  return out;
}

Ceiling build_ceiling(const RunConfig& c, const Floor& floor, double height_max) {
  const bool linear = c.ceiling.interpolation == Interpolation::linear;
  const std::size_t count = linear ? floor.vertex_count() : floor.cell_count();
  std::vector<double> heights;
  switch (c.ceiling.source) {
    case CeilingSpec::Source::constant: heights.assign(count, c.ceiling.constant); break;
    case CeilingSpec::Source::inline_heights: heights = c.ceiling.heights; break;
    case CeilingSpec::Source::csv: heights = read_height_csv(c.ceiling.csv_path, count); break;
    case CeilingSpec::Source::random: heights = random_heights(c.seed, count, height_max); break;
  }
  return linear ? Ceiling::linear(floor, std::move(heights)) : Ceiling::step(floor, std::move(heights));
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WarpingFunction wf = build_warping(c);
    const CertificationReport cert = certify(wf, c.grid_points);
    KeyValueWriter w;
    w.add("command", "check").add("warping", wf.source()).add("domain_max", wf.domain_max());
    append(w, cert);
    out << w.str();
    return cert.positive && cert.log_convex ? kOk : kCertification;
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = build_instance(c);
    const Ceiling ceiling = build_ceiling(c, inst.floor, inst.m.height_max());
    VerifyOptions options;
    options.tol_verify = c.tol_verify;
    options.certification_grid = c.grid_points;
    IsoperimetricReport report = verify(inst.floor, ceiling, inst.m, options);
    if (c.ceiling.source == CeilingSpec::Source::random) report.seed = c.seed;
    const CalibrationResult calibration = calibration_check(inst.floor, ceiling, inst.m);

    KeyValueWriter w;
    w.add("command", "verify").add("warping", inst.wf.source()).add("k", inst.k);
    append(w, report);
    append(w, calibration);
    out << w.str();

    if (!c.csv_path.empty()) {
      const bool fresh = !std::filesystem::exists(c.csv_path) ||
                         std::filesystem::file_size(c.csv_path) == 0;
      write_text(c.csv_path,
                 (fresh ? verify_csv_header() : std::string()) +
                     verify_csv_row(report, inst.wf.source(), inst.k),
                 true);
    }
    if (!report.log_convex) return kCertification;
    return report.violated() ? kViolation : kOk;
  });
}

int cmd_omega(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WarpingFunction wf = build_warping(c);
    const MuIntegral m(wf, fiber_dimension(c), c.floor.base, c.tol_quad);
    OmegaOptions options;
    options.grid = c.grid_points;
    if (c.h_min > 0.0) options.h_min_fraction = c.h_min / m.height_max();
    const OmegaResult o = omega(m, declared_limit(c), options);

    KeyValueWriter w;
    w.add("command", "omega").add("warping", wf.source()).add("n", m.k());
    append(w, o);
    const std::string csv = critical_points_csv(o.critical_points);
    if (!c.output.empty()) {
      write_text(c.output, csv);
      w.add("critical_points_csv", c.output);
      out << w.str();
    } else {
      out << w.str() << '\n' << csv;
    }
    return kOk;
  });
}

int cmd_profile(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WarpingFunction wf = build_warping(c);
    const MuIntegral m(wf, fiber_dimension(c), c.floor.base, c.tol_quad);
    const double h_max = c.h_max > 0.0 ? c.h_max : m.height_max();
    const double h_min = c.h_min > 0.0 ? c.h_min : 1e-3 * h_max;
    const std::string csv = profile_csv(profile(m, h_min, h_max, c.samples));
    if (!c.output.empty()) {
      write_text(c.output, csv);
    } else {
      out << csv;
    }
    return kOk;
  });
}

int cmd_dido(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!c.area) throw ConfigError("run.area is required for dido");
    const Instance inst = build_instance(c);
    const DidoSolution s = dido_solve(inst.floor, inst.m, *c.area);
    KeyValueWriter w;
    w.add("command", "dido")
        .add("warping", inst.wf.source())
        .add("n", inst.k)
        .add("area", *c.area)
        .add("vol_floor", floor_volume(inst.floor))
        .add("solution_count", s.solutions.size());
    for (std::size_t i = 0; i < s.solutions.size(); ++i) {
      w.add("solution_" + std::to_string(i), s.solutions[i]);
    }
    w.add("chosen_h", s.chosen_h).add("vol_room", s.vol_room);
    out << w.str();
    return kOk;
  });
}

std::vector<RunConfig> repro_presets(std::string_view name) {
  if (name == "ex1") return {preset("exp(t^2 - 2*sin(t))", 1)};
  if (name == "ex2") return {preset("cosh(t)", 2)};
  if (name == "ex3") return {preset("cosh(t)", 1)};
  if (name == "ex4") return {preset("1", 1), preset("exp(-t)", 1)};
  throw ConfigError("unknown example '" + std::string(name) + "' (expected ex1, ex2, ex3 or ex4)");
}

ReproResult run_repro(std::string_view name) {
  ReproResult r;
  r.name = std::string(name);
  const std::vector<RunConfig> presets = repro_presets(name);
  KeyValueWriter w;
  w.add("command", "repro").add("example", r.name);

  if (name == "ex4") {
    r.pass = true;
    for (const RunConfig& c : presets) {
      std::ostringstream sink_out, sink_err;
      const int code = cmd_omega(c, sink_out, sink_err);
      r.omega_exit_codes.push_back(code);
      w.add("warping", c.warping).add("omega_exit_code", code);
      r.pass = r.pass && code == kPrecondition;
    }
    w.add("expect", "omega unavailable (bounded f, profile decreases to zero)");
    w.add("signature", r.pass ? "pass" : "fail");
    r.report = w.str();
    return r;
  }

  const RunConfig& c = presets.front();
  const WarpingFunction wf = build_warping(c);
  const MuIntegral m(wf, c.k, 0.0, c.tol_quad);
  const OmegaOptions options;
  const OmegaResult o = omega(m, std::nullopt, options);
  r.critical_point_count = o.critical_points.size();
  r.omega = o.omega;
  r.plateau = o.plateau;

  const double top = m.height_max();
  const auto samples = profile(m, options.h_min_fraction * top, top, options.grid);

  std::size_t argmin = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].profile < samples[argmin].profile) argmin = i;
  }
  std::size_t ties = 0;
  for (const auto& s : samples) ties += s.profile == samples[argmin].profile ? 1 : 0;
  const double spacing = samples[1].h - samples[0].h;
  r.unique_global_min =
      ties == 1 && !o.critical_points.empty() &&
      std::fabs(samples[argmin].h - o.critical_points.front().h) <= 2.0 * spacing;
  r.strictly_decreasing = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].profile < samples[i - 1].profile)) r.strictly_decreasing = false;
  }

  w.add("warping", c.warping).add("n", c.k);
  append(w, o);
  w.add("profile_argmin_h", samples[argmin].h)
      .add("profile_min", samples[argmin].profile)
      .add("unique_global_min", r.unique_global_min)
      .add("strictly_decreasing", r.strictly_decreasing);

  if (name == "ex1") {
    r.pass = r.critical_point_count >= 3 && r.unique_global_min;
    w.add("expect", "at least 3 critical points in (0, 10], unique global minimum");
  } else if (name == "ex2") {
    r.pass = r.critical_point_count == 1 && o.omega < 2.0 && std::fabs(o.plateau - 2.0) <= 1e-3;
    w.add("expect", "exactly 1 critical point, omega < 2, plateau 2");
  } else {
    r.pass = r.critical_point_count == 0 && std::fabs(o.plateau - 1.0) <= 1e-3 &&
             r.strictly_decreasing;
    w.add("expect", "no critical points, plateau 1, strictly decreasing profile");
  }
  w.add("signature", r.pass ? "pass" : "fail");
  r.report = w.str();
  return r;
}

int cmd_repro(std::string_view name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ReproResult r = run_repro(name);
    out << r.report;
    return r.pass ? kOk : kViolation;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Relative isoperimetric inequality and Dido bounds for warped products R x_f N",
               "warpiso"};
  cli.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  std::string example;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "INI run configuration")->check(CLI::ExistingFile);
    sub->add_option("--set", overrides, "Override a configuration key (section.key=value)");
    sub->add_option("--out", output, "Write CSV output to this file (same as run.output)");
  };

  CLI::App* check = cli.add_subcommand("check", "Certify positivity and log-convexity of f");
  CLI::App* verify_cmd = cli.add_subcommand("verify", "Compare a ceiling with its constant-height rival");
  CLI::App* omega_cmd = cli.add_subcommand("omega", "Lower bound omega of the isoperimetric profile");
  CLI::App* profile_cmd = cli.add_subcommand("profile", "Sample the isoperimetric profile as CSV");
  CLI::App* dido = cli.add_subcommand("dido", "Largest room for a prescribed ceiling area");
  CLI::App* repro = cli.add_subcommand("repro", "Run a named example preset (ex1 .. ex4)");
  for (CLI::App* sub : {check, verify_cmd, omega_cmd, profile_cmd, dido}) add_common(sub);
  repro->add_option("name", example, "ex1, ex2, ex3 or ex4")->required();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (repro->parsed()) return cmd_repro(example, out, err);

  RunConfig config;
  const int loaded = guarded(err, [&] {
    if (!output.empty()) overrides.push_back("run.output=" + output);
    config = load_config(config_path, overrides);
    return kOk;
  });
  if (loaded != kOk) return loaded;

  if (check->parsed()) return cmd_check(config, out, err);
  if (verify_cmd->parsed()) return cmd_verify(config, out, err);
  if (omega_cmd->parsed()) return cmd_omega(config, out, err);
  if (profile_cmd->parsed()) return cmd_profile(config, out, err);
  return cmd_dido(config, out, err);
}

}  // namespace warpiso::app
