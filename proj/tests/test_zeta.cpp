#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "dilog7/clausen.hpp"
#include "dilog7/identities.hpp"
#include "dilog7/zeta.hpp"
#include "oracles.hpp"

using namespace dilog7;
using dilog7::testing::Rng;

namespace {
const PrecisionContext ctx = make_context(50);
}

TEST_CASE("kronecker symbol: the mod-7 character and spot values") {
  const int want[7] = {1, 1, -1, 1, -1, -1, 0};
  for (unsigned long n = 1; n <= 7; ++n) CHECK(kronecker(-7, n) == want[n - 1]);
  CHECK(kronecker(-7, 14) == 0);
  for (long d : {-8L, -7L, -4L, -3L, 5L, 12L}) CHECK(kronecker(d, 1) == 1);
  CHECK_THROWS_AS(kronecker(0, 3), DomainError);
}

TEST_CASE("kronecker symbol agrees with the GMP implementation") {
  Rng rng(0x6a0cb1ULL);
  for (int i = 0; i < 4000; ++i) {
    long d = static_cast<long>(rng.next() % 601) - 300;
    if (d == 0) d = -7;
    unsigned long n = rng.next() % 2000;
    mpz_class zd(d), zn(static_cast<unsigned long>(n));
    CHECK(kronecker(d, n) == mpz_kronecker(zd.get_mpz_t(), zn.get_mpz_t()));
  }
}

TEST_CASE("kronecker symbol is multiplicative and periodic for tested moduli") {
  Rng rng(0x5eedULL);
  for (long d : {-3L, -4L, -7L}) {
    unsigned long period = static_cast<unsigned long>(-d);
    for (unsigned long n = 1; n <= 4 * period; ++n) {
      CHECK(kronecker(d, n) == kronecker(d, n + period));
    }
    for (int i = 0; i < 50; ++i) {
      unsigned long a = 1 + rng.next() % 500;
      unsigned long b = 1 + rng.next() % 500;
      CHECK(kronecker(d, a * b) == kronecker(d, a) * kronecker(d, b));
    }
  }
}

TEST_CASE("character tables") {
  KroneckerCharacter chi7 = character_table(-7);
  CHECK(chi7.period == 7);
  CHECK(chi7.values == std::vector<int>{1, 1, -1, 1, -1, -1, 0});
  int sum = 0;
  for (int v : chi7.values) sum += v;
  CHECK(sum == 0);
  CHECK(chi7.at(7) == 0);
  CHECK(chi7.at(16) == 1);  // 16 = 2 mod 7

  CHECK(character_table(-3).values == std::vector<int>{1, -1, 0});
  CHECK(character_table(-4).values == std::vector<int>{1, 0, -1, 0});
}

TEST_CASE("hurwitz zeta: closed-form anchors") {
  Real pi2_6 = ctx.pi() * ctx.pi() / 6;
  CHECK(digits_agreed(hurwitz_zeta(ctx.real(2), ctx.real(1), ctx), pi2_6, ctx) >= 50);
  Real pi2_2 = ctx.pi() * ctx.pi() / 2;
  CHECK(digits_agreed(hurwitz_zeta(ctx.real(2), ctx.real(0.5), ctx), pi2_2, ctx) >= 50);
}

TEST_CASE("hurwitz zeta equals the Riemann oracle at a = 1") {
  for (long s : {2L, 3L, 4L}) {
    Real z = hurwitz_zeta(ctx.real(s), ctx.real(1), ctx);
    CHECK(digits_agreed(z, dilog7::testing::riemann_zeta_oracle(ctx.real(s), ctx), ctx) >=
          ctx.digits() - 5);
  }
}

TEST_CASE("hurwitz zeta brackets between integral tail bounds") {
  Rng rng(0x40acfeULL);
  const long N = 400;
  for (int i = 0; i < 20; ++i) {
    Real s = ctx.real(rng.uniform(1.5, 5.0));
    Real a = ctx.real(rng.uniform(0.1, 3.0));
    Real z = hurwitz_zeta(s, a, ctx);

    Real partial = ctx.real(0);
    for (long m = 0; m < N; ++m) partial = partial + pow(a + m, -s);
    // integral bounds: (N+a)^(1-s)/(s-1) <= tail <= (N-1+a)^(1-s)/(s-1)
    Real lo = partial + pow(a + N, 1 - s) / (s - 1);
    Real hi = partial + pow(a + (N - 1), 1 - s) / (s - 1);
    CHECK(z >= lo - ctx.tolerance());
    CHECK(z <= hi + ctx.tolerance());
  }
}

TEST_CASE("hurwitz zeta rejects out-of-domain arguments") {
  CHECK_THROWS_AS(hurwitz_zeta(ctx.real(1), ctx.real(1), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ctx.real(0.5), ctx.real(1), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ctx.real(2), ctx.real(0), ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ctx.real(2), ctx.real(-1), ctx), DomainError);
}

TEST_CASE("the L_-7(2) reference value") {
  LSeriesValue l = dirichlet_l(-7, ctx.real(2), ctx);
  CHECK(l.representation == LRepresentation::kHurwitzSum);
  // frozen from an independent multiprecision evaluation of the Hurwitz sum
  Real want = ctx.parse(
      "1.151925470544491047101692397320549964797821404686566914083968636166124163455");
  CHECK(digits_agreed(l.value, want, ctx) >= 50);
  CHECK(l.value.str(11) == "1.1519254705");
}

TEST_CASE("first block of the direct series transcribes literally") {
  // 1 + 1/4 - 1/9 + 1/16 - 1/25 - 1/36
  Real want = ctx.real(1) + ctx.real(1) / 4 - ctx.real(1) / 9 + ctx.real(1) / 16 -
              ctx.real(1) / 25 - ctx.real(1) / 36;
  Real got = ctx.real(0);
  const int chi[6] = {1, 1, -1, 1, -1, -1};
  for (int r = 1; r <= 6; ++r) {
    Real t = 1 / ctx.real(r * r);
    got = chi[r - 1] > 0 ? got + t : got - t;
  }
  CHECK(digits_agreed(got, want, ctx) >= ctx.digits() - 2);
}

TEST_CASE("three representations of L_-7 agree pairwise") {
  for (long s : {2L, 3L}) {
    LSeriesValue direct = l_minus7_direct(ctx.real(s), ctx);
    CHECK(direct.representation == LRepresentation::kDirectSeries);
    LSeriesValue hurwitz = dirichlet_l(-7, ctx.real(s), ctx);
    CHECK(digits_agreed(direct.value, hurwitz.value, ctx) >= ctx.digits() - 5);
  }
  LSeriesValue clausen = l_minus7_clausen(ctx);
  CHECK(clausen.representation == LRepresentation::kClausenForm);
  CHECK(digits_agreed(clausen.value, dirichlet_l(-7, ctx.real(2), ctx).value, ctx) >=
        ctx.digits() - 5);
}

TEST_CASE("l_minus7_clausen transcribes the three-term bracket with its signs") {
  Real pi = ctx.pi();
  Real a = cl2(mul_2si(pi, 1) / 7, ctx).value;
  Real b = cl2(mul_2si(pi, 2) / 7, ctx).value;
  Real c = cl2(6 * pi / 7, ctx).value;
  CHECK(a > 0);
  CHECK(b > 0);
  CHECK(c > 0);
  Real want = mul_2si((a + b - c) / sqrt(ctx.real(7)), 1);
  CHECK(digits_agreed(l_minus7_clausen(ctx).value, want, ctx) == ctx.digits());
  // the third value enters negatively: flipping it breaks the identity
  Real flipped = mul_2si((a + b + c) / sqrt(ctx.real(7)), 1);
  CHECK(digits_agreed(flipped, dirichlet_l(-7, ctx.real(2), ctx).value, ctx) < 2);
}

TEST_CASE("three-way agreement holds through 256 digits") {
  PrecisionContext wide = make_context(256);
  Real direct = l_minus7_direct(wide.real(2), wide).value;
  Real hurwitz = dirichlet_l(-7, wide.real(2), wide).value;
  Real clausen = l_minus7_clausen(wide).value;
  CHECK(digits_agreed(direct, hurwitz, wide) >= 251);
  CHECK(digits_agreed(direct, clausen, wide) >= 251);
  CHECK(digits_agreed(hurwitz, clausen, wide) >= 251);
}

TEST_CASE("l_minus7_clausen at stated precisions") {
  PrecisionContext c100 = make_context(100);
  CHECK(digits_agreed(l_minus7_clausen(c100).value, l_minus7_direct(c100.real(2), c100).value,
                      c100) >= 95);
  PrecisionContext c32 = make_context(32);
  CHECK(digits_agreed(l_minus7_clausen(c32).value, dirichlet_l(-7, c32.real(2), c32).value,
                      c32) >= 27);
}

TEST_CASE("the mod-3 series cross-check against its chi-weighted sum") {
  // direct chi-weighted brute force with an integral tail bracket
  Real s = ctx.real(2);
  LSeriesValue l3 = dirichlet_l(-3, s, ctx);
  Real partial = ctx.real(0);
  const long N = 3000;
  for (long n = 1; n <= N; ++n) {
    int c = kronecker(-3, static_cast<unsigned long>(n));
    if (c == 0) continue;
    Real t = pow(ctx.real(n), -s);
    partial = c > 0 ? partial + t : partial - t;
  }
  // the tail of the alternating block series is below the next block
  Real slack = pow(ctx.real(N), -s) * 3;
  CHECK(abs(l3.value - partial) <= slack);
}

TEST_CASE("Fourier expansion reproduces the character") {
  for (long d : {-3L, -4L, -7L}) {
    KroneckerCharacter chi = character_table(d);
    for (unsigned long n = 1; n <= 3 * chi.period; ++n) {
      Real f = character_fourier_check(d, n, ctx);
      CHECK(abs(f - ctx.real(chi.at(n))) <= ctx.tolerance());
    }
  }
  CHECK(abs(character_fourier_check(-7, 3, ctx) + 1) <= ctx.tolerance());
  CHECK(abs(character_fourier_check(-7, 7, ctx)) <= ctx.tolerance());
  CHECK_THROWS_AS(character_fourier_check(7, 1, ctx), DomainError);
}
