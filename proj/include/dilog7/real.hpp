#pragma once

#include <mpfr.h>

#include <string>

namespace dilog7 {

using Prec = mpfr_prec_t;

/*
 * Arbitrary-precision real number: a thin RAII wrapper over mpfr_t.
 *
 * Every value carries its own precision in bits.  Each operation rounds
 * to nearest at the larger of its operands' precisions, so an expression
 * evaluated from inputs of a given working precision stays at that
 * precision and produces bit-identical results on every run and on every
 * thread.  No global or thread-local precision state is consulted.
 */
class Real {
 public:
  Real() { mpfr_init2(v_, 53); }
  explicit Real(Prec bits) { mpfr_init2(v_, bits); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  }

  static Real of(long n, Prec bits);
  static Real of(int n, Prec bits) { return of(static_cast<long>(n), bits); }
  static Real of(double x, Prec bits);
  static Real parse(const std::string& text, Prec bits);
  static Real pi(Prec bits);
  static Real pow10(long k, Prec bits);          // 10^k
  static Real zeta_ui(unsigned long n, Prec bits);  // Riemann zeta at integer n >= 2

  Prec precision() const { return mpfr_get_prec(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal rendering with `digits` significant digits, round-to-nearest.
  // Fixed notation for moderate exponents, scientific otherwise.
  std::string str(int digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
Real operator-(const Real& a);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);
bool operator<=(const Real& a, long b);
bool operator>=(const Real& a, long b);
bool operator==(const Real& a, long b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real tan(const Real& a);
Real atan(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real log10(const Real& a);
Real exp(const Real& a);
Real pow(const Real& base, const Real& expo);
Real pow_si(const Real& base, long n);
Real mul_2si(const Real& a, long k);  // a * 2^k, exact
Real floor(const Real& a);
Real round_nearest(const Real& a);  // to nearest integer, halfway away from zero
// x - n*y with n = nearest integer to x/y (single correctly rounded op).
Real remainder(const Real& x, const Real& y);

}  // namespace dilog7
