#include <doctest.h>

#include <cmath>
#include <random>

#include "warpiso/dido.hpp"
#include "warpiso/errors.hpp"
#include "warpiso/isoperimetric.hpp"

using namespace warpiso;

namespace {

MuIntegral mu_of(const char* src, int k = 1, double domain_max = 10.0) {
  return MuIntegral(WarpingFunction::parse(src, domain_max), k);
}

}  // namespace

TEST_SUITE("dido") {

TEST_CASE("profile closed forms") {
  const auto c = mu_of("cosh(t)");
  const auto s = profile(c, 1.0, 2.0, 2);
  CHECK(s.front().profile == doctest::Approx(1.31303528549933130364).epsilon(1e-12));
  CHECK(s.front().growth == doctest::Approx(std::tanh(1.0)).epsilon(1e-14));
  const auto one = profile(mu_of("1"), 0.5, 4.0, 8);
  for (const auto& p : one) CHECK(p.profile == doctest::Approx(1.0 / p.h).epsilon(1e-12));
}

TEST_CASE("profile is the logarithmic derivative of I") {
  for (const char* src : {"cosh(t)", "exp(t)", "exp(t^2 - 2*sin(t))"}) {
    const auto m = mu_of(src, 1, 3.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 2.9);
    for (int i = 0; i < 100; ++i) {
      const double h = u(rng), d = 1e-5;
      const double fd = (std::log(m.I(h + d)) - std::log(m.I(h - d))) / (2 * d);
      CHECK(std::fabs(fd - m.mu(h) / m.I(h)) <= 1e-6 * std::max(1.0, fd));
    }
  }
}

TEST_CASE("critical points of the reference examples") {
  const auto ex2 = critical_points(mu_of("cosh(t)", 2), 0.01, 10.0);
  REQUIRE(ex2.size() == 1);
  CHECK(ex2[0].h == doctest::Approx(1.19967864025773383392).epsilon(1e-9));
  CHECK(ex2[0].value == doctest::Approx(1.66711311920192939687).epsilon(1e-10));

  const auto ex1 = critical_points(mu_of("exp(t^2 - 2*sin(t))"), 0.01, 10.0);
  REQUIRE(!ex1.empty());
  CHECK(ex1[0].h == doctest::Approx(0.98966884449227864408).epsilon(1e-9));
  CHECK(ex1[0].value == doctest::Approx(0.88140431878818708660).epsilon(1e-10));
  for (std::size_t i = 1; i < ex1.size(); ++i) CHECK(ex1[i].value >= ex1[i - 1].value - 1e-9);

  CHECK(critical_points(mu_of("cosh(t)"), 0.01, 10.0).empty());
}

TEST_CASE("omega") {
  const auto o3 = omega(mu_of("cosh(t)"), std::nullopt);
  CHECK(o3.source == OmegaSource::limit_nf_over_f);
  CHECK(o3.omega == doctest::Approx(1.0).epsilon(1e-6));
  const auto o2 = omega(mu_of("cosh(t)", 2), std::nullopt);
  CHECK(o2.source == OmegaSource::first_critical_value);
  CHECK(o2.omega <= o2.plateau);
  CHECK(omega(mu_of("cosh(t)"), 0.5).omega == 0.5);
  CHECK_THROWS_AS(omega(mu_of("exp(-t)"), std::nullopt), PreconditionError);
  CHECK_THROWS_AS(omega(mu_of("1"), std::nullopt), PreconditionError);
}

TEST_CASE("limit of the profile approaches the growth rate") {
  double previous = 1e300;
  for (double top : {4.0, 8.0, 16.0}) {
    const auto m = mu_of("cosh(t)", 2, top);
    const double gap = std::fabs(m.mu(top) / m.I(top) - m.growth(top));
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("volume bound") {
  const Floor unit = Floor::interval(1, 1);
  const auto v = volume_bound_check(unit, Ceiling::constant(unit, 2), mu_of("exp(t)"), 1.0);
  CHECK(v.vol_room == doctest::Approx(std::exp(2.0) - 1));
  CHECK(v.ok);
  const auto m = mu_of("cosh(t)");
  const Floor f = Floor::interval(1, 6);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 8);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> h(6);
    for (double& x : h) x = u(rng);
    const Ceiling c = Ceiling::step(f, h);
    CHECK(volume_bound_check(f, c, m, 1.0).ok);
    const auto r = verify(f, c, m);
    CHECK(m.mu(r.H) / m.I(r.H) <= r.vol_C_vertical / r.vol_room + 1e-8);
  }
}

TEST_CASE("dido solver") {
  const Floor unit = Floor::interval(1, 1);
  const auto s = dido_solve(unit, mu_of("cosh(t)"), std::cosh(1.0));
  CHECK(s.chosen_h == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(s.vol_room == doctest::Approx(std::sinh(1.0)).epsilon(1e-10));

  const auto e = dido_solve(unit, mu_of("exp(t^2 - 2*sin(t))"), 1.0);
  REQUIRE(e.solutions.size() == 2);
  CHECK(e.solutions[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(e.solutions[1] == doctest::Approx(1.40441482409243436415).epsilon(1e-9));
  CHECK(e.chosen_h == e.solutions[1]);

  CHECK_THROWS_AS(dido_solve(unit, mu_of("1"), 1.0), DegenerateEquationError);
  CHECK_THROWS_AS(dido_solve(unit, mu_of("1"), 2.0), NoSolutionError);
  CHECK_THROWS_AS(dido_solve(unit, mu_of("cosh(t)"), 0.5), NoSolutionError);
}

}
