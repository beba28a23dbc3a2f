#include "dilog7/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace dilog7 {

namespace {

std::mutex g_bernoulli_mu;
std::vector<mpq_class> g_bernoulli;  // guarded by g_bernoulli_mu

// Extends the table through index n using
//   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k.
void extend_locked(unsigned n) {
  if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
  for (unsigned m = static_cast<unsigned>(g_bernoulli.size()); m <= n; ++m) {
    if (m > 1 && m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    mpq_class acc(0);
    mpz_class binom(1);  // C(m+1, k), starting at k = 0
    for (unsigned k = 0; k < m; ++k) {
      acc += binom * g_bernoulli[k];
      binom *= static_cast<long>(m + 1 - k);
      binom /= static_cast<long>(k + 1);
    }
    mpq_class b = -acc / mpq_class(static_cast<long>(m + 1));
    b.canonicalize();
    g_bernoulli.push_back(std::move(b));
  }
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mu);
  if (n >= g_bernoulli.size()) extend_locked(n);
  return g_bernoulli[n];
}

Real bernoulli_real(unsigned n, Prec bits) {
  mpq_class b = bernoulli(n);
  Real r(bits);
  mpfr_set_q(r.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace dilog7
