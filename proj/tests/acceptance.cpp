// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "warpiso/app.hpp"
#include "warpiso/dido.hpp"
#include "warpiso/errors.hpp"
#include "warpiso/isoperimetric.hpp"
#include "warpiso/report.hpp"

using namespace warpiso;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

// f = exp(a t^2 + b t) with a in [0, 1], b in [-1, 2].
struct Family {
  double a;
  double b;
  std::string source() const {
    return "exp(" + format_number(a) + "*t^2 + " + format_number(b) + "*t)";
  }
};

struct Instance {
  Family fam;
  int k;
  std::vector<double> weights;
  std::vector<double> heights;
};

constexpr double kWindow = 3.0;

Instance draw_instance(std::mt19937_64& rng, bool log_linear, std::size_t max_cells) {
  std::uniform_real_distribution<double> ua(0.0, 1.0), ub(-1.0, 2.0), uw(0.05, 2.0),
      uh(0.0, 0.8 * kWindow);
  std::uniform_int_distribution<std::size_t> ur(1, max_cells);
  std::uniform_int_distribution<int> uk(1, 3);
  Instance in;
  in.fam = {log_linear ? 0.0 : ua(rng), ub(rng)};
  in.k = uk(rng);
  const std::size_t r = ur(rng);
  for (std::size_t i = 0; i < r; ++i) {
    in.weights.push_back(uw(rng));
    in.heights.push_back(uh(rng));
  }
  return in;
}

MuIntegral mu_for(const Family& fam, int k) {
  return MuIntegral(WarpingFunction::parse(fam.source(), kWindow), k);
}

IsoperimetricReport verify_instance(const Instance& in) {
  const Floor floor = Floor::weighted_cells(in.weights, in.k);
  return verify(floor, Ceiling::step(floor, in.heights), mu_for(in.fam, in.k));
}

Verdict theorem_suite() {
  std::mt19937_64 rng(1);
  double worst = INFINITY;
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const auto r = verify_instance(draw_instance(rng, false, 16));
    worst = std::min(worst, r.margin);
    if (r.margin < -1e-8 || !r.log_convex) ++bad;
  }
  return {bad == 0, "200 instances, min margin " + format_number(worst) + ", " +
                        std::to_string(bad) + " below -1e-8"};
}

Verdict jensen_tightness() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    Instance in = draw_instance(rng, true, 16);
    if (i == 0) in.fam = {0.0, 1.0};  // f = e^t
    const auto r = verify_instance(in);
    worst = std::max(worst, std::fabs(r.margin));
    const bool constant = std::all_of(in.heights.begin(), in.heights.end(),
                                      [&](double h) { return h == in.heights.front(); });
    const bool flag_ok = r.equality == EqualityCase::log_linear_equality ||
                         (constant && r.equality == EqualityCase::exact_constant);
    if (std::fabs(r.margin) > 1e-9 || !flag_ok) ++bad;
  }
  return {bad == 0, "100 log-linear instances, max |margin| " + format_number(worst) + ", " +
                        std::to_string(bad) + " failures"};
}

Verdict closed_form_height() {
  const MuIntegral m(WarpingFunction::parse("cosh(t)", 10), 1);
  const Floor floor = Floor::interval(1, 2);
  const auto r = verify(floor, Ceiling::step(floor, {0, 1}), m);
  const double H = std::asinh(std::sinh(1.0) / 2);
  const double eH = std::fabs(r.H - H), eS = std::fabs(r.vol_S - std::cosh(H) * r.vol_floor);
  return {eH <= 1e-8 && eS <= 1e-8,
          "H=" + format_number(r.H) + " |dH|=" + format_number(eH) + " |dvol_S|=" + format_number(eS)};
}

// Independent oracle: cumulative Simpson table of mu on 10^6 points with a
// direct std::exp integrand, inverted by local Newton steps.
double dense_scan_height(const Instance& in) {
  const std::size_t n = 1'000'000;
  const double step = kWindow / n;
  auto mu = [&](double t) { return std::exp(in.k * (in.fam.a * t * t + in.fam.b * t)); };
  std::vector<double> table(n / 2 + 1, 0.0);
  for (std::size_t j = 1; j <= n / 2; ++j) {
    const double x0 = (2 * j - 2) * step;
    table[j] = table[j - 1] + step / 3 * (mu(x0) + 4 * mu(x0 + step) + mu(x0 + 2 * step));
  }
  auto I = [&](double h) {
    const std::size_t j = std::min<std::size_t>(static_cast<std::size_t>(h / (2 * step)), n / 2);
    const double x0 = 2 * step * j, d = h - x0;
    return table[j] + d / 6 * (mu(x0) + 4 * mu(x0 + d / 2) + mu(h));
  };
  double target = 0.0, vol = 0.0;
  for (std::size_t i = 0; i < in.weights.size(); ++i) {
    target += in.weights[i] * I(in.heights[i]);
    vol += in.weights[i];
  }
  target /= vol;
  const auto it = std::upper_bound(table.begin(), table.end(), target);
  double h = 2 * step * static_cast<double>(std::distance(table.begin(), it) - 1);
  for (int iter = 0; iter < 4; ++iter) h += (target - I(h)) / mu(h);
  return h;
}

Verdict brute_force_height() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Instance in = draw_instance(rng, false, 4);
    const Floor floor = Floor::weighted_cells(in.weights, in.k);
    const double H = solve_constant_height(floor, Ceiling::step(floor, in.heights),
                                           mu_for(in.fam, in.k));
    worst = std::max(worst, std::fabs(H - dense_scan_height(in)));
  }
  return {worst <= 1e-6, "50 instances, max |H - H_scan| " + format_number(worst)};
}

Verdict calibration_identity() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> ures(1, 12);
  std::uniform_real_distribution<double> uh(0.0, 0.8 * kWindow);
  double worst = 0.0;
  int broken = 0;
  for (int i = 0; i < 50; ++i) {
    Instance in = draw_instance(rng, false, 1);
    in.k = i % 4 < 2 ? 1 : 2;  // fiber dimension of the grid floor
    const MuIntegral m = mu_for(in.fam, in.k);
    const std::size_t res = ures(rng);
    const Floor floor = in.k == 2 ? Floor::rectangle(1.0, 0.5, res, 2) : Floor::interval(1.5, res);
    const bool linear = i % 2 == 1;
    std::vector<double> h(linear ? floor.vertex_count() : floor.cell_count());
    for (double& x : h) x = uh(rng);
    const Ceiling c = linear ? Ceiling::linear(floor, h) : Ceiling::step(floor, h);
    const auto cal = calibration_check(floor, c, m);
    worst = std::max(worst, cal.gap_B);
    if (!cal.chain_holds) ++broken;
  }
  return {worst <= 1e-8 && broken == 0, "50 instances, max gap " + format_number(worst) + ", " +
                                            std::to_string(broken) + " chain failures"};
}

Verdict example_signatures() {
  std::string detail;
  bool all = true;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) {
    std::ostringstream out, err;
    const int code = app::cmd_repro(name, out, err);
    const auto r = app::run_repro(name);
    all = all && code == 0 && r.pass;
    detail += std::string(name) + (r.pass ? " pass" : " FAIL");
    if (std::string_view(name) != "ex4") {
      detail += " (" + std::to_string(r.critical_point_count) + " crit)";
    }
    detail += "; ";
  }
  return {all, detail};
}

Verdict profile_identity() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uh(0.1, 2.9);
  double worst = 0.0;
  for (const char* src : {"cosh(t)", "exp(t)", "exp(t^2 - 2*sin(t))"}) {
    const MuIntegral m(WarpingFunction::parse(src, kWindow), 1);
    for (int i = 0; i < 100; ++i) {
      const double h = uh(rng), d = 1e-5;
      const double fd = (std::log(m.I(h + d)) - std::log(m.I(h - d))) / (2 * d);
      worst = std::max(worst, std::fabs(fd - m.mu(h) / m.I(h)));
    }
  }
  return {worst <= 1e-6, "300 points, max |d log I - mu/I| " + format_number(worst)};
}

Verdict volume_bound() {
  std::string detail;
  bool all = true;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> ures(1, 16);
  for (const char* name : {"ex1", "ex2", "ex3"}) {
    const RunConfig c = app::repro_presets(name).front();
    const MuIntegral m(WarpingFunction::parse(c.warping, c.domain_max), c.k);
    const double w = omega(m, std::nullopt).omega;
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const Floor floor = Floor::interval(1.0, ures(rng));
      const Ceiling ceil = Ceiling::step(
          floor, app::random_heights(rng(), floor.cell_count(), m.height_max()));
      if (!volume_bound_check(floor, ceil, m, w).ok) ++bad;
    }
    all = all && bad == 0;
    detail += std::string(name) + " omega=" + format_number(w) + " " + std::to_string(bad) +
              " violations; ";
  }
  return {all, detail};
}

Verdict dido_solver() {
  const MuIntegral m(WarpingFunction::parse("cosh(t)", 10), 1);
  const Floor unit = Floor::interval(1, 1);
  const auto s = dido_solve(unit, m, std::cosh(1.0));
  const double eh = std::fabs(s.chosen_h - 1), ev = std::fabs(s.vol_room - std::sinh(1.0));
  bool degenerate = false;
  try {
    dido_solve(unit, MuIntegral(WarpingFunction::parse("1", 10), 1), 1.0);
  } catch (const DegenerateEquationError&) {
    degenerate = true;
  }
  return {eh <= 1e-8 && ev <= 1e-8 && degenerate,
          "|dh|=" + format_number(eh) + " |dvol|=" + format_number(ev) +
              (degenerate ? ", f=1 rejected as degenerate" : ", f=1 NOT rejected")};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string theorem_csv(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string csv = verify_csv_header();
  for (int i = 0; i < 50; ++i) {
    const Instance in = draw_instance(rng, false, 16);
    auto r = verify_instance(in);
    r.seed = seed;
    csv += verify_csv_row(r, in.fam.source(), in.k);
  }
  return csv;
}

Verdict determinism() {
  const bool suite = theorem_csv(10) == theorem_csv(10);
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> outputs;
  for (int rep = 0; rep < 2; ++rep) {
    const std::string csv = (dir / ("warpiso_det_" + std::to_string(rep) + ".csv")).string();
    std::filesystem::remove(csv);
    RunConfig c = parse_config("[warping]\nexpr = cosh(t)\ndomain_max = 4\n"
                               "[floor]\nkind = rectangle\nresolution = 6 5\n"
                               "[ceiling]\nheights = random\n[run]\nseed = 1234\n");
    c.csv_path = csv;
    std::ostringstream out, err;
    for (int i = 0; i < 3; ++i) app::cmd_verify(c, out, err);
    c.samples = 64;
    app::cmd_profile(c, out, err);
    outputs.push_back(slurp(csv) + out.str());
    std::filesystem::remove(csv);
  }
  const bool cli = outputs[0] == outputs[1] && !outputs[0].empty();
  return {suite && cli, std::string("property-suite CSV ") + (suite ? "identical" : "DIFFERS") +
                            ", verify/profile CSV " + (cli ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"AC1", theorem_suite},      {"AC2", jensen_tightness},   {"AC3", closed_form_height},
      {"AC4", brute_force_height}, {"AC5", calibration_identity}, {"AC6", example_signatures},
      {"AC7", profile_identity},   {"AC8", volume_bound},       {"AC9", dido_solver},
      {"AC10", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      v.pass = false;
      v.detail += " [over 10 s budget]";
    }
    failures += v.pass ? 0 : 1;
    std::printf("%-4s %s  %s (%.2f s)\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
