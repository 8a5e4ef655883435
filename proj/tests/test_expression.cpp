#include <doctest.h>

#include <cmath>
#include <random>

#include "warpiso/errors.hpp"
#include "warpiso/expression.hpp"

using warpiso::Expression;

TEST_SUITE("expression") {

TEST_CASE("parse trees") {
  CHECK(Expression::parse("exp(t^2 - 2*sin(t))").tree() ==
        "Exp(Sub(Pow(Var t, 2), Mul(2, Sin(Var t))))");
  CHECK(Expression::parse("cosh(t)").tree() == "Cosh(Var t)");
  CHECK(Expression::parse(" 3 ").is_constant());
  CHECK_FALSE(Expression::parse("t*0+1").is_constant());
}

TEST_CASE("precedence and associativity") {
  CHECK(Expression::parse("1 - 2 - 3").value(0) == -4.0);
  CHECK(Expression::parse("8 / 4 / 2").value(0) == 1.0);
  CHECK(Expression::parse("2 + 3 * t").value(2) == 8.0);
  CHECK(Expression::parse("-t^2").value(3) == -9.0);
  CHECK(Expression::parse("2e-1 * 10").value(0) == doctest::Approx(2.0));
}

TEST_CASE("parse errors carry kind and offset") {
  try {
    Expression::parse("exp(t) + foo(t)");
    FAIL("expected ParseError");
  } catch (const warpiso::ParseError& e) {
    CHECK(e.kind() == warpiso::ParseError::Kind::unknown_identifier);
    CHECK(e.offset() == 9);
  }
  CHECK_THROWS_AS(Expression::parse("exp()"), warpiso::ParseError);
  CHECK_THROWS_AS(Expression::parse("exp(t, 2)"), warpiso::ParseError);
  CHECK_THROWS_AS(Expression::parse("(t"), warpiso::ParseError);
  CHECK_THROWS_AS(Expression::parse("t +"), warpiso::ParseError);
  CHECK_THROWS_AS(Expression::parse("t $ 1"), warpiso::ParseError);
  CHECK_THROWS_AS(Expression::parse(""), warpiso::ParseError);
}

TEST_CASE("domain errors name the subexpression") {
  CHECK_THROWS_AS(Expression::parse("log(t)").value(0), warpiso::DomainError);
  CHECK_THROWS_AS(Expression::parse("1/(t-1)").value(1), warpiso::DomainError);
  CHECK_THROWS_AS(Expression::parse("(t-2)^0.5").value(1), warpiso::DomainError);
  try {
    Expression::parse("1 + log(t - 1)").value(0.5);
    FAIL("expected DomainError");
  } catch (const warpiso::DomainError& e) {
    CHECK(e.subexpression().find("log") != std::string::npos);
  }
}

TEST_CASE("jets match finite differences") {
  const char* sources[] = {"exp(t^2 - 2*sin(t))", "cosh(t)", "sinh(t)/t", "log(1+t)*cos(t)",
                           "t^t", "(1+t)^(-1.5)", "exp(-t)", "2^t"};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  const double h = 1e-5;
  for (const char* s : sources) {
    const Expression e = Expression::parse(s);
    for (int i = 0; i < 100; ++i) {
      const double t = u(rng);
      const auto j = e.jet(t);
      CHECK(j.v == e.value(t));
      const double d1 = (e.value(t + h) - e.value(t - h)) / (2 * h);
      const double d2 = (e.jet(t + h).d1 - e.jet(t - h).d1) / (2 * h);
      CHECK(j.d1 == doctest::Approx(d1).epsilon(1e-6));
      CHECK(j.d2 == doctest::Approx(d2).epsilon(1e-6));
    }
  }
}

TEST_CASE("unparse round-trips") {
  for (const char* s : {"exp(t^2 - 2*sin(t))", "-(t+1)^3/2", "1e-3*t + cosh(t)*sinh(t)", "0.1"}) {
    const Expression a = Expression::parse(s);
    const Expression b = Expression::parse(a.to_string());
    CHECK(a.tree() == b.tree());
    CHECK(a.value(1.3) == b.value(1.3));
  }
}

}
