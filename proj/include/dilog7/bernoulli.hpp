#pragma once

#include <gmpxx.h>

#include "dilog7/real.hpp"

namespace dilog7 {

/*
 * Exact Bernoulli numbers under the B1 = -1/2 convention, computed from the
 * defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 in rational arithmetic.
 * Values are cached write-once; concurrent callers are fine.
 */
mpq_class bernoulli(unsigned n);

// B_n rounded to `bits` of precision.
Real bernoulli_real(unsigned n, Prec bits);

// n! as an exact integer.
mpz_class factorial(unsigned long n);

}  // namespace dilog7
