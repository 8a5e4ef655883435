#include <doctest.h>

#include <cmath>

#include "warpiso/errors.hpp"
#include "warpiso/quadrature.hpp"

TEST_SUITE("quadrature") {

TEST_CASE("single Kronrod panel is exact for polynomials up to degree 22") {
  for (int d = 0; d <= 22; ++d) {
    auto f = [d](double x) { return std::pow(x, d); };
    const auto p = warpiso::detail::gauss_kronrod15(f, 0.0, 1.0);
    CHECK(p.value == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
  }
}

TEST_CASE("adaptive integration") {
  auto r = warpiso::integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 3.0, 1e-12);
  CHECK(r.value == doctest::Approx(std::exp(3.0) - 1).epsilon(1e-14));
  CHECK(r.error <= 1e-10);

  auto peak = warpiso::integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0,
                                          1.0, 1e-10);
  CHECK(peak.value == doctest::Approx(2 * std::atan(1e2) / 1e-2).epsilon(1e-12));
  CHECK(peak.intervals > 1);

  auto rev = warpiso::integrate_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-12);
  CHECK(rev.value == doctest::Approx(-0.5));
}

TEST_CASE("budget exhaustion reports the achieved error") {
  try {
    warpiso::integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-15, 20);
    FAIL("expected ConvergenceError");
  } catch (const warpiso::ConvergenceError& e) {
    CHECK(e.achieved_error() > 1e-15);
  }
}

}
