#include "dilog7/zeta.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "dilog7/bernoulli.hpp"
#include "dilog7/clausen.hpp"

namespace dilog7 {

namespace {

// B_{2j}/(2j)! at a given precision, cached write-once (same discipline as
// the zeta(2k) table in the clausen module).
class EmCoefficientCache {
 public:
  const std::deque<Real>& ensure(Prec bits, std::size_t jmax) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& table = by_prec_[bits];
    while (table.size() < jmax) {
      unsigned long j = static_cast<unsigned long>(table.size()) + 1;
      Real num = bernoulli_real(static_cast<unsigned>(2 * j), bits);
      mpz_class f = factorial(2 * j);
      Real den(bits);
      mpfr_set_z(den.raw(), f.get_mpz_t(), MPFR_RNDN);
      table.push_back(num / den);
    }
    return table;
  }

 private:
  std::mutex mu_;
  std::map<Prec, std::deque<Real>> by_prec_;
};

EmCoefficientCache g_em_coeff;

}  // namespace

int kronecker(long d, unsigned long n) {
  if (d == 0) throw DomainError("kronecker symbol needs a nonzero modulus");
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;

  long a = d;
  long b = static_cast<long>(n);
  if (a % 2 == 0 && b % 2 == 0) return 0;

  // (a/2) for odd a, indexed by a mod 8: +1 at 1, 7; -1 at 3, 5.
  static const int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

  int sign = 1;
  int twos = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++twos;
  }
  if (twos % 2 == 1) sign = kTwoTable[((a % 8) + 8) & 7];
  if (sign == 0) return 0;

  // b is odd and positive; for such b the symbol is periodic in the top
  // argument with period b, so bring a into [0, b).
  a %= b;
  if (a < 0) a += b;

  while (a != 0) {
    int v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1 && (b % 8 == 3 || b % 8 == 5)) sign = -sign;
    if ((a & b & 2) != 0) sign = -sign;  // reciprocity: both = 3 (mod 4)
    long t = a;
    a = b % t;
    b = t;
  }
  return b == 1 ? sign : 0;
}

KroneckerCharacter character_table(long d) {
  if (d == 0) throw DomainError("character table needs a nonzero modulus");
  KroneckerCharacter chi;
  chi.d = d;
  chi.period = static_cast<unsigned long>(d < 0 ? -d : d);
  chi.values.reserve(chi.period);
  for (unsigned long i = 1; i <= chi.period; ++i) {
    chi.values.push_back(kronecker(d, i));
  }
  return chi;
}

Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx) {
  if (!(s > 1)) throw DomainError("hurwitz_zeta requires real s > 1");
  if (!(a > 0)) throw DomainError("hurwitz_zeta requires a > 0");

  const Prec W = ctx.work_bits();
  const Real tol = ctx.internal_tolerance();
  const int workd = ctx.digits() + ctx.guard();
  const Real neg_s = -s;

  long n_head = std::max(16L, static_cast<long>(0.4 * workd));
  for (int attempt = 0; attempt < 6; ++attempt, n_head *= 2) {
    Real head = Real::of(0, W);
    for (long m = 0; m < n_head; ++m) head = head + pow(a + m, neg_s);

    Real na = a + n_head;
    Real base = pow(na, 1 - s) / (s - 1) + mul_2si(pow(na, neg_s), -1);

    // Bernoulli corrections; the remainder is bounded by the first
    // omitted term for real s > 1.
    Real na2_inv = 1 / (na * na);
    Real na_pow = pow(na, neg_s - 1);
    Real poch = s;
    Real corr = Real::of(0, W);
    Real last_abs = Real::of(0, W);
    std::size_t jmax = static_cast<std::size_t>(workd) + 16;
    const std::deque<Real>* coeff = &g_em_coeff.ensure(W, 16);
    for (long j = 1;; ++j) {
      if (static_cast<std::size_t>(j) > coeff->size()) {
        coeff = &g_em_coeff.ensure(W, coeff->size() + 16);
      }
      Real term = (*coeff)[static_cast<std::size_t>(j - 1)] * poch * na_pow;
      Real ta = abs(term);
      if (j > 1 && ta > last_abs) break;  // divergence onset: enlarge head
      corr = corr + term;
      if (ta < tol) return head + base + corr;
      last_abs = std::move(ta);
      poch = poch * (s + (2 * j - 1)) * (s + 2 * j);
      na_pow = na_pow * na2_inv;
      if (static_cast<std::size_t>(j) > jmax) break;
    }
  }
  throw ConvergenceError("hurwitz_zeta Euler-Maclaurin tail did not reach tolerance");
}

LSeriesValue dirichlet_l(long d, const Real& s, const PrecisionContext& ctx) {
  if (!(s > 1)) throw DomainError("dirichlet_l requires real s > 1");
  KroneckerCharacter chi = character_table(d);
  const long period = static_cast<long>(chi.period);

  Real sum = ctx.real(0);
  for (unsigned long l = 1; l < chi.period; ++l) {
    int c = chi.values[l - 1];
    if (c == 0) continue;
    Real z = hurwitz_zeta(s, ctx.real(static_cast<long>(l)) / period, ctx);
    sum = c > 0 ? sum + z : sum - z;
  }
  Real value = sum * pow(ctx.real(period), -s);
  return {d, s, std::move(value), LRepresentation::kHurwitzSum};
}

LSeriesValue l_minus7_direct(const Real& s, const PrecisionContext& ctx) {
  if (!(s > 1)) throw DomainError("l_minus7_direct requires real s > 1");
  static const int kChi7[6] = {1, 1, -1, 1, -1, -1};

  const Prec W = ctx.work_bits();
  const Real tol = ctx.internal_tolerance();
  const int workd = ctx.digits() + ctx.guard();
  const Real neg_s = -s;

  long blocks = std::max(16L, static_cast<long>(0.4 * workd));
  for (int attempt = 0; attempt < 6; ++attempt, blocks *= 2) {
    // head: whole blocks of seven, innermost residue order fixed
    Real head = Real::of(0, W);
    for (long m = 0; m < blocks; ++m) {
      for (int r = 1; r <= 6; ++r) {
        Real t = pow(ctx.real(7 * m + r), neg_s);
        head = kChi7[r - 1] > 0 ? head + t : head - t;
      }
    }

    // Euler-Maclaurin tail of the block function g(m) from m = blocks:
    //   integral term, g/2, then
    //   sum_j B_2j/(2j)! 7^(2j-1) (s)_(2j-1) sum_r chi(r) (7M+r)^(-s-2j+1).
    Real integral = Real::of(0, W);
    Real half_g = Real::of(0, W);
    std::vector<Real> q_pow;   // (7M+r)^(-s-1)
    std::vector<Real> sq_inv;  // (7M+r)^(-2)
    for (int r = 1; r <= 6; ++r) {
      Real base = ctx.real(7 * blocks + r);
      Real ipart = pow(base, 1 - s) / ((s - 1) * 7);
      Real gpart = mul_2si(pow(base, neg_s), -1);
      if (kChi7[r - 1] > 0) {
        integral = integral + ipart;
        half_g = half_g + gpart;
      } else {
        integral = integral - ipart;
        half_g = half_g - gpart;
      }
      q_pow.push_back(pow(base, neg_s - 1));
      sq_inv.push_back(1 / (base * base));
    }

    Real poch = s;
    Real seven_pow = ctx.real(7);  // 7^(2j-1)
    Real corr = Real::of(0, W);
    Real last_abs = Real::of(0, W);
    const std::deque<Real>* coeff = &g_em_coeff.ensure(W, 16);
    bool reached = false;
    for (long j = 1; static_cast<std::size_t>(j) < static_cast<std::size_t>(workd) + 16; ++j) {
      if (static_cast<std::size_t>(j) > coeff->size()) {
        coeff = &g_em_coeff.ensure(W, coeff->size() + 16);
      }
      Real chi_sum = Real::of(0, W);
      for (int r = 0; r < 6; ++r) {
        chi_sum = kChi7[r] > 0 ? chi_sum + q_pow[r] : chi_sum - q_pow[r];
      }
      Real term = (*coeff)[static_cast<std::size_t>(j - 1)] * seven_pow * poch * chi_sum;
      Real ta = abs(term);
      if (j > 1 && ta > last_abs) break;
      corr = corr + term;
      if (ta < tol) {
        reached = true;
        break;
      }
      last_abs = std::move(ta);
      poch = poch * (s + (2 * j - 1)) * (s + 2 * j);
      seven_pow = seven_pow * 49;
      for (int r = 0; r < 6; ++r) q_pow[r] = q_pow[r] * sq_inv[r];
    }
    if (reached) {
      return {-7, s, head + integral + half_g + corr, LRepresentation::kDirectSeries};
    }
  }
  throw ConvergenceError("l_minus7_direct tail did not reach tolerance");
}

LSeriesValue l_minus7_clausen(const PrecisionContext& ctx) {
  Real pi = ctx.pi();
  Real v = cl2(mul_2si(pi, 1) / 7, ctx).value + cl2(mul_2si(pi, 2) / 7, ctx).value -
           cl2(6 * pi / 7, ctx).value;
  Real value = mul_2si(v / sqrt(ctx.real(7)), 1);
  return {-7, ctx.real(2), std::move(value), LRepresentation::kClausenForm};
}

Real character_fourier_check(long d, unsigned long n, const PrecisionContext& ctx) {
  if (d >= 0) throw DomainError("character_fourier_check requires d < 0");
  KroneckerCharacter chi = character_table(d);
  const long period = static_cast<long>(chi.period);

  Real two_pi = mul_2si(ctx.pi(), 1);
  Real sum = ctx.real(0);
  for (unsigned long l = 1; l < chi.period; ++l) {
    int c = chi.values[l - 1];
    if (c == 0) continue;
    Real arg = two_pi * static_cast<long>(l * n) / period;
    sum = c > 0 ? sum + sin(arg) : sum - sin(arg);
  }
  return sum / sqrt(ctx.real(period));
}

}  // namespace dilog7
