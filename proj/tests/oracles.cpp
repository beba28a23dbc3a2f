#include "oracles.hpp"

#include <gmpxx.h>

#include <cmath>

namespace dilog7::testing {

Real alternating_sum(const std::function<Real(long)>& a, int n, Prec bits) {
  // Cohen-Rodriguez Villegas-Zagier acceleration, algorithm 1.
  Real d = pow_si(3 + mul_2si(sqrt(Real::of(2, bits)), 1), n);  // (3 + sqrt 8)^n
  d = mul_2si(d + 1 / d, -1);
  Real b = Real::of(-1, bits);
  Real c = -d;
  Real s = Real::of(0, bits);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s = s + c * a(k);
    b = b * ((k + n) * (k - n)) / ((k + Real::of(1, bits) / 2) * (k + 1));
  }
  return s / d;
}

int alternating_terms_for(int digits) {
  // error ~ (3+sqrt8)^-n: 1.31 terms per digit, plus margin
  return static_cast<int>(std::ceil(digits * 2.302585 / 1.7627471740390861)) + 12;
}

Real machin_pi(int digits, Prec bits) {
  const int scale_digits = digits + 10;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));

  auto atan_inv = [&](unsigned long x) {
    mpz_class sum = 0;
    mpz_class power = scale / x;  // scale / x^(2k+1)
    mpz_class x2 = mpz_class(x) * x;
    unsigned long k = 0;
    while (power != 0) {
      mpz_class term = power / (2 * k + 1);
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
      power /= x2;
      ++k;
    }
    return sum;
  };

  mpz_class pi_scaled = 16 * atan_inv(5) - 4 * atan_inv(239);
  Real num(bits), den(bits);
  mpfr_set_z(num.raw(), pi_scaled.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.raw(), scale.get_mpz_t(), MPFR_RNDN);
  return num / den;
}

Real riemann_zeta_oracle(const Real& s, const PrecisionContext& ctx) {
  const Prec W = ctx.work_bits();
  int n = alternating_terms_for(ctx.digits() + 5);
  Real neg_s = -s;
  Real eta = alternating_sum(
      [&](long k) { return pow(Real::of(k + 1, W), neg_s); }, n, W);
  return eta / (1 - pow(Real::of(2, W), 1 - s));
}

Real catalan_oracle(const PrecisionContext& ctx) {
  const Prec W = ctx.work_bits();
  int n = alternating_terms_for(ctx.digits() + 5);
  return alternating_sum(
      [&](long k) { return 1 / Real::of((2 * k + 1) * (2 * k + 1), W); }, n, W);
}

Real cl2_pi_third_oracle(const PrecisionContext& ctx) {
  const Prec W = ctx.work_bits();
  int n = alternating_terms_for(ctx.digits() + 5);
  Real blocks = alternating_sum(
      [&](long k) {
        return 1 / Real::of((3 * k + 1) * (3 * k + 1), W) +
               1 / Real::of((3 * k + 2) * (3 * k + 2), W);
      },
      n, W);
  return mul_2si(sqrt(Real::of(3, W)), -1) * blocks;
}

}  // namespace dilog7::testing
