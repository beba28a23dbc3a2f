#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilog7/clausen.hpp"
#include "dilog7/identities.hpp"
#include "oracles.hpp"

using namespace dilog7;
using dilog7::testing::Rng;

namespace {

const PrecisionContext ctx = make_context(50);

bool within(const Real& x, const Real& y, const Real& tol) { return abs(x - y) <= tol; }

}  // namespace

TEST_CASE("cl2 vanishes at integer multiples of pi") {
  CHECK(cl2(ctx.real(0), ctx).value.is_zero());
  for (long m : {-2L, -1L, 1L, 2L, 3L}) {
    Real v = cl2(ctx.pi() * m, ctx).value;
    CHECK(abs(v) <= ctx.tolerance());
  }
}

TEST_CASE("cl2 at pi/2 is Catalan's constant") {
  Real g = dilog7::testing::catalan_oracle(ctx);
  CHECK(g.str(20) == "0.91596559417721901505");  // sanity-pin the oracle itself
  EvalResult r = cl2(mul_2si(ctx.pi(), -1), ctx);
  CHECK(digits_agreed(r.value, g, ctx) >= 50);
  CHECK(r.error_bound >= 0);
  CHECK(r.error_bound <= ctx.tolerance());
  CHECK(r.method == Method::kSeries);
}

TEST_CASE("cl2 at pi/3") {
  Real want = dilog7::testing::cl2_pi_third_oracle(ctx);
  CHECK(want.str(11) == "1.0149416064");
  CHECK(digits_agreed(cl2(ctx.pi() / 3, ctx).value, want, ctx) >= 50);
}

TEST_CASE("cl2 rejects non-finite input") {
  Real bad(ctx.work_bits());  // NaN
  CHECK_THROWS_AS(Angle{bad}, DomainError);
}

TEST_CASE("series partial sums: literal transcription cases") {
  CHECK(abs(cl2_series_partial(Angle(ctx.pi()), 50)) <= Real::pow10(-45, ctx.work_bits()));
  Real one_term = cl2_series_partial(Angle(mul_2si(ctx.pi(), -1)), 1);
  CHECK(within(one_term, ctx.real(1), Real::pow10(-45, ctx.work_bits())));
}

TEST_CASE("series partial sum approaches Catalan like 1/N") {
  Real g = dilog7::testing::catalan_oracle(ctx);
  Real partial = cl2_series_partial(Angle(mul_2si(ctx.pi(), -1)), 1000000);
  CHECK(abs(partial - g) <= Real::pow10(-6, ctx.work_bits()));
}

TEST_CASE("series-oracle consistency with the crude 2/N tail bound") {
  Rng rng(0xc1a05e2ULL);
  for (int i = 0; i < 10; ++i) {
    Real theta = ctx.real(rng.uniform(0.2, 6.0));
    unsigned long n = 400 + static_cast<unsigned long>(rng.uniform() * 2000);
    Real tail_bound = Real::of(2, ctx.work_bits()) / static_cast<long>(n);
    CHECK(abs(cl2(theta, ctx).value - cl2_series_partial(Angle(theta), n)) <= tail_bound);
  }
}

TEST_CASE("oddness over random angles") {
  Rng rng(0x0dd5eedULL);
  for (int i = 0; i < 100; ++i) {
    Real theta = ctx.real(rng.uniform(-10.0, 10.0));
    Real lhs = cl2(-theta, ctx).value;
    Real rhs = -cl2(theta, ctx).value;
    CHECK(digits_agreed(lhs, rhs, ctx) >= ctx.digits() - 2);
  }
}

TEST_CASE("2 pi periodicity") {
  Rng rng(0x9e110dULL);
  Real two_pi = mul_2si(ctx.pi(), 1);
  for (int i = 0; i < 25; ++i) {
    Real theta = ctx.real(rng.uniform(-3.0, 3.0));
    Real base = cl2(theta, ctx).value;
    for (long m = -3; m <= 3; ++m) {
      CHECK(digits_agreed(cl2(theta + two_pi * m, ctx).value, base, ctx) >= ctx.digits() - 2);
    }
  }
}

TEST_CASE("reflection through pi") {
  Rng rng(0x5ef1ec7ULL);
  for (int i = 0; i < 100; ++i) {
    Real theta = ctx.real(rng.uniform(-6.0, 6.0));
    Real lhs = cl2(ctx.pi() + theta, ctx).value;
    Real rhs = -cl2(ctx.pi() - theta, ctx).value;
    CHECK(digits_agreed(lhs, rhs, ctx) >= ctx.digits() - 2);
  }
}

TEST_CASE("integral route agrees with the series route") {
  // spot values
  CHECK(abs(cl2_via_integral(Angle(ctx.pi()), ctx).value) <= ctx.tolerance());
  Real g = dilog7::testing::catalan_oracle(ctx);
  EvalResult q = cl2_via_integral(Angle(mul_2si(ctx.pi(), -1)), ctx);
  CHECK(q.method == Method::kIntegral);
  CHECK(within(q.value, g, ctx.tolerance()));
  EvalResult qneg = cl2_via_integral(Angle(-mul_2si(ctx.pi(), -1)), ctx);
  CHECK(within(qneg.value, -g, ctx.tolerance()));

  // dual-path agreement across (0, 2 pi)
  Rng rng(0xd0a1ULL);
  Real floor = Real::pow10(-(ctx.digits() - 5), ctx.work_bits());
  for (int i = 0; i < 12; ++i) {
    Real theta = mul_2si(ctx.pi(), 1) * ctx.real(rng.uniform(0.001, 0.999));
    Real series = cl2(theta, ctx).value;
    Real integral = cl2_via_integral(Angle(theta), ctx).value;
    CHECK(abs(series - integral) <= floor);
  }
}

TEST_CASE("cl2_via_integral rejects angles beyond one period") {
  CHECK_THROWS_AS(cl2_via_integral(Angle(ctx.real(7)), ctx), DomainError);
}

TEST_CASE("multiplication formula") {
  SUBCASE("m = 1 collapses to cl2 itself") {
    Real theta = ctx.real(0.83);
    CHECK(digits_agreed(multiplication_rhs(Angle(theta), 1, ctx), cl2(theta, ctx).value, ctx) >=
          ctx.digits() - 2);
  }
  SUBCASE("statement and proof forms agree on random angles") {
    Rng rng(0x11117ULL);
    Real bound = 10 * ctx.tolerance();
    for (unsigned m : {2u, 3u, 4u, 5u, 7u}) {
      for (int i = 0; i < 20; ++i) {
        Real theta = ctx.real(rng.uniform(-3.0, 3.0));
        Real lhs = cl2(theta * static_cast<long>(m), ctx).value;
        Real rhs = multiplication_rhs(Angle(theta), m, ctx);
        CHECK(abs(lhs - rhs) <= bound);
        // proof form: sum_l Cl2(theta + 2 pi l / m) = Cl2(m theta)/m
        CHECK(abs(rhs / static_cast<long>(m) - lhs / static_cast<long>(m)) <= bound);
      }
    }
  }
}

TEST_CASE("duplication and triplication") {
  Rng rng(0xd0b1eULL);
  Real bound = 10 * ctx.tolerance();
  for (int i = 0; i < 50; ++i) {
    Real theta = ctx.real(rng.uniform(-3.0, 3.0));
    // Cl2(2t)/2 = Cl2(t) - Cl2(pi - t) = Cl2(t) + Cl2(pi + t)
    Real half_dup = mul_2si(cl2(mul_2si(theta, 1), ctx).value, -1);
    CHECK(abs(half_dup - (cl2(theta, ctx).value - cl2(ctx.pi() - theta, ctx).value)) <= bound);
    CHECK(abs(half_dup - (cl2(theta, ctx).value + cl2(ctx.pi() + theta, ctx).value)) <= bound);
    // Cl2(3t)/3 = Cl2(t) + Cl2(t + 2pi/3) + Cl2(t - 2pi/3)
    Real third_trip = cl2(theta * 3, ctx).value / 3;
    Real two_thirds_pi = mul_2si(ctx.pi(), 1) / 3;
    Real rhs = cl2(theta, ctx).value + cl2(theta + two_thirds_pi, ctx).value +
               cl2(theta - two_thirds_pi, ctx).value;
    CHECK(abs(third_trip - rhs) <= bound);
  }
}

TEST_CASE("multiplication reduction used for 6 phi7") {
  // m = 3 at 2 phi7 reproduces the triplication route to Cl2(6 phi7)
  Real phi7 = atan(sqrt(ctx.real(7)));
  Real two_phi = mul_2si(phi7, 1);
  Real lhs = cl2(3 * two_phi, ctx).value;
  CHECK(abs(lhs - multiplication_rhs(Angle(two_phi), 3, ctx)) <= 10 * ctx.tolerance());
  // m = 2 at pi/3: Cl2(2pi/3) = 2[Cl2(pi/3) - Cl2(pi - pi/3)]... via the rhs helper
  Real pi_third = ctx.pi() / 3;
  CHECK(abs(cl2(mul_2si(pi_third, 1), ctx).value - multiplication_rhs(Angle(pi_third), 2, ctx)) <=
        10 * ctx.tolerance());
}

TEST_CASE("character sine sums collapse by divisibility") {
  PrecisionContext c32 = make_context(32);
  Real tol = Real::pow10(-30, c32.work_bits());
  Real theta = c32.real(0.7);

  CHECK(abs(character_sine_sum(1, 2, Angle(theta))) <= tol);
  CHECK(abs(character_sine_sum(4, 2, Angle(theta)) - 2 * sin(c32.real(2.8))) <= tol);

  Rng rng(0x51e5ULL);
  for (int i = 0; i < 10; ++i) {
    Real t = c32.real(rng.uniform(-2.0, 2.0));
    CHECK(abs(character_sine_sum(6, 3, Angle(t)) - 3 * sin(6 * t)) <= tol);
    CHECK(abs(character_sine_sum(5, 3, Angle(t))) <= tol);
  }
}

TEST_CASE("error bounds accompany successful evaluations") {
  Rng rng(0xb0bULL);
  for (int i = 0; i < 10; ++i) {
    Real theta = ctx.real(rng.uniform(-20.0, 20.0));
    EvalResult r = cl2(theta, ctx);
    CHECK(r.error_bound >= 0);
    CHECK(r.error_bound <= ctx.tolerance());
  }
}
