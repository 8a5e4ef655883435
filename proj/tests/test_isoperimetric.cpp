#include <doctest.h>

#include <cmath>

#include "warpiso/errors.hpp"
#include "warpiso/isoperimetric.hpp"

using namespace warpiso;

namespace {

MuIntegral mu_of(const char* src, int k = 1, double domain_max = 5.0) {
  return MuIntegral(WarpingFunction::parse(src, domain_max), k);
}

}  // namespace

TEST_SUITE("isoperimetric") {

TEST_CASE("constant height examples") {
  const Floor f = Floor::interval(1, 4);
  CHECK(solve_constant_height(f, Ceiling::step(f, {0, 1, 2, 3}), mu_of("1")) ==
        doctest::Approx(1.5).epsilon(1e-12));
  const Floor two = Floor::interval(1, 2);
  CHECK(solve_constant_height(two, Ceiling::step(two, {0, 2}), mu_of("exp(t)")) ==
        doctest::Approx(std::log((1 + std::exp(2.0)) / 2)).epsilon(1e-10));
  const double H = solve_constant_height(two, Ceiling::step(two, {0, 1}), mu_of("cosh(t)"));
  CHECK(H == doctest::Approx(0.558163459511606104878).epsilon(1e-12));
}

TEST_CASE("verify examples") {
  const Floor two = Floor::interval(1, 2);
  const auto cosh_r = verify(two, Ceiling::step(two, {0, 1}), mu_of("cosh(t)"));
  CHECK(cosh_r.vol_C_vertical == doctest::Approx(1.27154031740762188924).epsilon(1e-12));
  CHECK(cosh_r.vol_S == doctest::Approx(1.159859673143891115).epsilon(1e-12));
  CHECK(cosh_r.margin > 0);
  CHECK(cosh_r.equality == EqualityCase::none);
  CHECK(cosh_r.strict_f);

  const auto exp_r = verify(two, Ceiling::step(two, {0, 1.7}), mu_of("exp(t)"));
  CHECK(std::fabs(exp_r.margin) <= 1e-9);
  CHECK(exp_r.equality == EqualityCase::log_linear_equality);

  const Floor f = Floor::interval(2.5, 5);
  const auto flat = verify(f, Ceiling::step(f, {0, 1, 3, 2, 0.2}), mu_of("1"));
  CHECK(flat.vol_S == doctest::Approx(2.5));
  CHECK(flat.vol_C_vertical == doctest::Approx(2.5));
  CHECK(flat.equality == EqualityCase::log_linear_equality);

  const auto m = mu_of("cosh(t)", 1);
  const double H = solve_constant_height(two, Ceiling::step(two, {0, 1}), m);
  CHECK(verify(two, Ceiling::constant(two, H), m).equality == EqualityCase::exact_constant);
}

TEST_CASE("non log-convex warping is reported, not asserted") {
  const Floor two = Floor::interval(1, 2);
  const auto r = verify(two, Ceiling::step(two, {0, 3}), mu_of("sin(t)+2"));
  CHECK_FALSE(r.log_convex);
  CHECK_FALSE(r.asserted());
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("scale equivariance") {
  const Floor f = Floor::weighted_cells({0.3, 1.1, 0.6}, 2);
  const Ceiling c = Ceiling::step(f, {0.4, 1.9, 1.2});
  const auto m = mu_of("cosh(t)", 2);
  const auto a = verify(f, c, m);
  const auto b = verify(f.scaled(2.0), c, m);
  CHECK(b.vol_room == doctest::Approx(2 * a.vol_room).epsilon(1e-14));
  CHECK(b.vol_S == doctest::Approx(2 * a.vol_S).epsilon(1e-12));
  CHECK(b.vol_C_vertical == doctest::Approx(2 * a.vol_C_vertical).epsilon(1e-14));
  CHECK(b.H == doctest::Approx(a.H).epsilon(1e-12));
  CHECK(b.margin / b.vol_floor == doctest::Approx(a.margin / a.vol_floor).epsilon(1e-9));
}

TEST_CASE("calibration") {
  const Floor unit = Floor::interval(1, 1);
  const auto c = calibration_check(unit, Ceiling::constant(unit, 1), mu_of("cosh(t)"));
  CHECK(c.div_B == doctest::Approx(std::cosh(1.0) - 1).epsilon(1e-12));
  CHECK(c.gap_B <= 1e-9);
  const auto e = calibration_check(unit, Ceiling::constant(unit, 1.5), mu_of("exp(t)"));
  CHECK(e.div_B == doctest::Approx(std::exp(1.5) - 1).epsilon(1e-12));
  const auto z = calibration_check(unit, Ceiling::constant(unit, 1.5), mu_of("1"));
  CHECK(z.div_B == 0.0);
  const Floor f = Floor::interval(1, 3);
  const auto r = calibration_check(f, Ceiling::step(f, {0.1, 2, 0.7}), mu_of("cosh(t)", 2));
  CHECK(r.chain_holds);
  CHECK(r.gap_R <= 1e-8);
}

TEST_CASE("room too tall for the window") {
  const Floor unit = Floor::interval(1, 1);
  CHECK_THROWS_AS(verify(unit, Ceiling::constant(unit, 6), mu_of("cosh(t)")), RangeError);
}

}
