#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilog7/constants.hpp"
#include "dilog7/expr.hpp"
#include "dilog7/identities.hpp"

using namespace dilog7;

namespace {
const PrecisionContext ctx = make_context(40);
}

TEST_CASE("literals and arithmetic") {
  CHECK(eval_expression("2", ctx) == ctx.real(2));
  CHECK(eval_expression("1.5 + 2.25", ctx) == ctx.real(3.75));
  CHECK(eval_expression("2*3 + 4/8", ctx) == ctx.real(6.5));
  CHECK(eval_expression("-(2 - 5)", ctx) == ctx.real(3));
  CHECK(eval_expression("2e3", ctx) == ctx.real(2000));
  CHECK(eval_expression("(1+2)*(3+4)", ctx) == ctx.real(21));
}

TEST_CASE("constants and functions") {
  Constants c = constants(ctx);
  CHECK(eval_expression("pi/2", ctx) == mul_2si(c.pi, -1));
  CHECK(eval_expression("phi7", ctx) == c.phi7);
  CHECK(eval_expression("theta_plus", ctx) == c.theta_plus);
  CHECK(eval_expression("omega_plus", ctx) == c.omega_plus);
  CHECK(eval_expression("sqrt(7)", ctx) == c.sqrt7);
  CHECK(eval_expression("sqrt7", ctx) == c.sqrt7);
  CHECK(digits_agreed(eval_expression("cl2(pi/2)", ctx), eval_expression("cl2(2*phi7 - 2*phi7 + pi/2)", ctx), ctx) >= ctx.digits() - 2);
  CHECK(eval_expression("L(-7, 2)", ctx).str(11) == "1.1519254705");
  CHECK(digits_agreed(eval_expression("zeta(2, 1)", ctx), c.pi * c.pi / 6, ctx) >=
        ctx.digits() - 5);
}

TEST_CASE("the six-value relation spelled as expressions") {
  Real lhs = eval_expression("3*cl2(2*phi7) - 3*cl2(4*phi7) + cl2(6*phi7)", ctx);
  Real rhs = eval_expression("7*sqrt(7)/4 * L(-7,2)", ctx);
  CHECK(digits_agreed(lhs, rhs, ctx) >= ctx.digits() - 5);
}

TEST_CASE("parse errors are configuration errors") {
  CHECK_THROWS_AS(eval_expression("", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("2 +", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("bogus", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("sqrt(2", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("1/0", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("f(3)", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("2 2", ctx), ConfigError);
  CHECK_THROWS_AS(eval_expression("L(1.5, 2)", ctx), ConfigError);
}

TEST_CASE("domain errors propagate from evaluation") {
  CHECK_THROWS_AS(eval_expression("zeta(0.5, 1)", ctx), DomainError);
  CHECK_THROWS_AS(eval_expression("sqrt(-1)", ctx), ConfigError);
}
