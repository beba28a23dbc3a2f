#pragma once

#include <vector>

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

/*
 * Kronecker symbol (d/n), computed by quadratic reciprocity with the
 * 2-adic and sign factors handled explicitly; takes values in {-1, 0, 1}.
 * Defined for all d != 0 and n >= 0.
 */
int kronecker(long d, unsigned long n);

// One period of the character n -> (d/n).  values[i-1] = (d/(i)) for
// i = 1..|d|; at(n) reads the table periodically, position |d| covering
// n == 0 (mod |d|).
struct KroneckerCharacter {
  long d = 0;
  unsigned long period = 0;
  std::vector<int> values;

  int at(unsigned long n) const {
    unsigned long r = n % period;
    return values[(r == 0 ? period : r) - 1];
  }
};

KroneckerCharacter character_table(long d);

/*
 * Hurwitz zeta  zeta(s, a) = sum_{m>=0} (m+a)^-s  for real s > 1, a > 0,
 * by Euler-Maclaurin: a direct head of N terms, the integral and midpoint
 * corrections, and Bernoulli-weighted derivative terms added until the
 * monitored last term drops below the internal tolerance (N is doubled if
 * the terms start growing first).
 */
Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);

enum class LRepresentation { kDirectSeries, kHurwitzSum, kClausenForm };

struct LSeriesValue {
  long d;
  Real s;
  Real value;
  LRepresentation representation;
};

// L_d(s) = |d|^-s sum_{l=1}^{|d|-1} (d/l) zeta(s, l/|d|), for s > 1.
LSeriesValue dirichlet_l(long d, const Real& s, const PrecisionContext& ctx);

// L_-7(s) summed directly in blocks of seven,
//   sum_m [ 1/(7m+1)^s + 1/(7m+2)^s - 1/(7m+3)^s
//         + 1/(7m+4)^s - 1/(7m+5)^s - 1/(7m+6)^s ],
// with an Euler-Maclaurin tail applied to the block function itself; an
// independent code path from hurwitz_zeta.
LSeriesValue l_minus7_direct(const Real& s, const PrecisionContext& ctx);

// L_-7(2) = (2/sqrt(7)) [Cl2(2 pi/7) + Cl2(4 pi/7) - Cl2(6 pi/7)].
LSeriesValue l_minus7_clausen(const PrecisionContext& ctx);

// Fourier expansion of the character for d < 0:
//   (1/sqrt|d|) sum_{l=1}^{|d|-1} (d/l) sin(2 pi l n / |d|),
// which reproduces (d/n).
Real character_fourier_check(long d, unsigned long n, const PrecisionContext& ctx);

}  // namespace dilog7
