#include "dilog7/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dilog7 {

namespace {

Prec join(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  return *this;
}

Real Real::of(long n, Prec bits) {
  Real r(bits);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

Real Real::of(double x, Prec bits) {
  Real r(bits);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, Prec bits) {
  Real r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a valid decimal number: '" + text + "'");
  }
  return r;
}

Real Real::pi(Prec bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long k, Prec bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
  if (k < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

Real Real::zeta_ui(unsigned long n, Prec bits) {
  Real r(bits);
  mpfr_zeta_ui(r.v_, n, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 2) digits = 2;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);

  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  auto strip_fraction_zeros = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    return s.substr(0, last + 1);
  };

  // mant is `digits` decimal digits with value = 0.mant * 10^e.
  std::string out;
  if (e > 0 && e <= digits + 6) {
    if (static_cast<size_t>(e) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    } else {
      out = strip_fraction_zeros(mant.substr(0, static_cast<size_t>(e)) + "." +
                                 mant.substr(static_cast<size_t>(e)));
    }
  } else if (e <= 0 && e > -6) {
    out = strip_fraction_zeros("0." + std::string(static_cast<size_t>(-e), '0') + mant);
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out = strip_fraction_zeros(out) + "e" + std::to_string(e - 1);
  }
  return sign + out;
}

#define DILOG7_BINOP(OP, FN)                              \
  Real operator OP(const Real& a, const Real& b) {        \
    Real r(join(a, b));                                   \
    FN(r.raw(), a.raw(), b.raw(), MPFR_RNDN);             \
    return r;                                             \
  }

DILOG7_BINOP(+, mpfr_add)
DILOG7_BINOP(-, mpfr_sub)
DILOG7_BINOP(*, mpfr_mul)
DILOG7_BINOP(/, mpfr_div)
#undef DILOG7_BINOP

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) > 0; }
bool operator<=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) <= 0; }
bool operator>=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) >= 0; }
bool operator==(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) == 0; }

#define DILOG7_UNFN(NAME, FN)          \
  Real NAME(const Real& a) {           \
    Real r(a.precision());             \
    FN(r.raw(), a.raw(), MPFR_RNDN);   \
    return r;                          \
  }

DILOG7_UNFN(abs, mpfr_abs)
DILOG7_UNFN(sqrt, mpfr_sqrt)
DILOG7_UNFN(sin, mpfr_sin)
DILOG7_UNFN(cos, mpfr_cos)
DILOG7_UNFN(tan, mpfr_tan)
DILOG7_UNFN(atan, mpfr_atan)
DILOG7_UNFN(log, mpfr_log)
DILOG7_UNFN(log1p, mpfr_log1p)
DILOG7_UNFN(log10, mpfr_log10)
DILOG7_UNFN(exp, mpfr_exp)
#undef DILOG7_UNFN

Real floor(const Real& a) {
  Real r(a.precision());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real round_nearest(const Real& a) {
  Real r(a.precision());
  mpfr_round(r.raw(), a.raw());
  return r;
}

Real pow(const Real& base, const Real& expo) {
  Real r(join(base, expo));
  mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& base, long n) {
  Real r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), n, MPFR_RNDN);
  return r;
}

Real mul_2si(const Real& a, long k) {
  Real r(a.precision());
  mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

Real remainder(const Real& x, const Real& y) {
  Real r(join(x, y));
  mpfr_remainder(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

}  // namespace dilog7
