#include "dilog7/pslq.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace dilog7 {

namespace {

mpz_class to_mpz(const Real& integer_valued) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), integer_valued.raw(), MPFR_RNDN);
  return z;
}

Real from_mpz(const mpz_class& z, Prec bits) {
  Real r(bits);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

struct MinEntry {
  std::size_t index = 0;
  Real value;
};

MinEntry min_abs(const std::vector<Real>& y) {
  MinEntry m{0, abs(y[0])};
  for (std::size_t i = 1; i < y.size(); ++i) {
    Real a = abs(y[i]);
    if (a < m.value) {
      m.index = i;
      m.value = std::move(a);
    }
  }
  return m;
}

}  // namespace

PslqResult pslq(const std::vector<Real>& values, const PrecisionContext& ctx,
                long norm_bound, long max_iterations) {
  const std::size_t n = values.size();
  if (n < 2) throw ConfigError("pslq needs at least two values");
  if (ctx.digits() < 20 * static_cast<int>(n)) {
    throw ConfigError("pslq needs a context of at least 20 digits per value");
  }
  if (norm_bound < 1) throw ConfigError("pslq norm bound must be positive");

  const Prec W = ctx.work_bits();
  const Real eps = Real::pow10(-(ctx.digits() - 15), W);
  const Real teps = Real::pow10(-(ctx.digits() - 15) + 12, W);

  PslqResult out;
  out.exclusion_bound = Real::of(1, W);

  // A zero entry is already a unit relation.
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].is_zero()) {
      IntegerRelation rel;
      rel.coefficients.assign(n, 0);
      rel.coefficients[i] = 1;
      rel.residual = Real::of(0, W);
      rel.norm_bound = norm_bound;
      out.status = PslqStatus::kRelationFound;
      out.relation = std::move(rel);
      return out;
    }
  }

  // Condition the lattice: scale by the largest magnitude entry.
  Real vmax = abs(values[0]);
  for (std::size_t i = 1; i < n; ++i) {
    Real a = abs(values[i]);
    if (a > vmax) vmax = std::move(a);
  }
  std::vector<Real> x;
  x.reserve(n);
  for (const Real& v : values) {
    Real xi = Real::of(0, W);
    mpfr_div(xi.raw(), v.raw(), vmax.raw(), MPFR_RNDN);
    x.push_back(std::move(xi));
  }

  // Initialise y (unit-normalised x), the lower-trapezoidal H basis of
  // the orthogonal complement, and the integer change-of-basis B.
  std::vector<Real> y(n, Real(W)), s(n, Real(W));
  {
    Real t = Real::of(0, W);
    for (std::size_t i = n; i-- > 0;) {
      t = t + x[i] * x[i];
      s[i] = sqrt(t);
    }
    Real inv = 1 / s[0];
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = x[i] * inv;
      s[i] = s[i] * inv;
    }
  }
  std::vector<std::vector<Real>> h(n, std::vector<Real>(n - 1, Real::of(0, W)));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    h[j][j] = s[j + 1] / s[j];
    Real tj = y[j] / (s[j] * s[j + 1]);
    for (std::size_t i = j + 1; i < n; ++i) h[i][j] = -y[i] * tj;
  }
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;

  auto reduce_row = [&](std::size_t i, std::size_t j_from) {
    for (std::size_t j = j_from + 1; j-- > 0;) {
      Real t = round_nearest(h[i][j] / h[j][j]);
      if (t.is_zero()) continue;
      mpz_class tz = to_mpz(t);
      y[j] = y[j] + t * y[i];
      for (std::size_t k = 0; k < n; ++k) b[k][j] += tz * b[k][i];
      for (std::size_t k = 0; k <= j; ++k) h[i][k] = h[i][k] - t * h[j][k];
    }
  };

  // Full Hermite reduction.
  for (std::size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

  const Real gamma = sqrt(Real::of(4, W) / 3);
  const Real sqrt_n = sqrt(Real::of(static_cast<long>(n), W));
  const Real bound_target = sqrt_n * norm_bound;

  auto lattice_bound = [&]() {
    Real hmax = abs(h[0][0]);
    for (std::size_t j = 1; j + 1 < n; ++j) {
      Real a = abs(h[j][j]);
      if (a > hmax) hmax = std::move(a);
    }
    return 1 / hmax;
  };

  auto finish_with_candidate = [&](std::size_t jm) -> PslqResult {
    std::vector<mpz_class> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = b[k][jm];
    mpz_class g = 0;
    for (const auto& ci : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    if (g != 0) {
      for (auto& ci : c) ci /= g;
    }
    for (const auto& ci : c) {
      if (ci != 0) {
        if (ci < 0) {
          for (auto& cj : c) cj = -cj;
        }
        break;
      }
    }
    mpz_class cmax = 0;
    for (const auto& ci : c) {
      mpz_class a = abs(ci);
      if (a > cmax) cmax = a;
    }
    if (cmax == 0 || cmax > norm_bound || !cmax.fits_slong_p()) {
      out.status = PslqStatus::kNoRelationWithinBound;
      out.exclusion_bound = lattice_bound();
      return out;
    }
    // Re-verify by direct dot product against the original inputs.
    Real residual = Real::of(0, W);
    for (std::size_t k = 0; k < n; ++k) {
      residual = residual + from_mpz(c[k], W) * x[k];
    }
    residual = abs(residual * vmax);
    if (!(residual <= eps * vmax || residual <= eps)) {
      out.status = PslqStatus::kPrecisionExhausted;
      out.exclusion_bound = lattice_bound();
      return out;
    }
    IntegerRelation rel;
    rel.coefficients.reserve(n);
    for (const auto& ci : c) rel.coefficients.push_back(ci.get_si());
    rel.residual = std::move(residual);
    rel.norm_bound = norm_bound;
    out.status = PslqStatus::kRelationFound;
    out.relation = std::move(rel);
    return out;
  };

  {
    MinEntry m = min_abs(y);
    if (m.value < eps) return finish_with_candidate(m.index);
  }

  for (long iter = 1; iter <= max_iterations; ++iter) {
    out.iterations = static_cast<int>(iter);

    // Row with the largest gamma^i |h_ii| moves down.
    std::size_t im = 0;
    {
      Real best(W);
      Real g = Real::of(1, W);
      bool have = false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        g = g * gamma;
        Real t = g * abs(h[i][i]);
        if (!have || t > best) {
          best = std::move(t);
          im = i;
          have = true;
        }
      }
    }
    const std::size_t im1 = im + 1;

    std::swap(y[im], y[im1]);
    std::swap(h[im], h[im1]);
    for (std::size_t i = 0; i < n; ++i) std::swap(b[i][im], b[i][im1]);

    if (im + 2 < n) {
      // Restore lower-trapezoidal shape with a Givens rotation on the
      // (im, im+1) column pair.
      Real t1 = h[im][im];
      Real t2 = h[im][im1];
      Real t3 = 1 / sqrt(t1 * t1 + t2 * t2);
      t1 = t1 * t3;
      t2 = t2 * t3;
      for (std::size_t i = im; i < n; ++i) {
        Real a = h[i][im];
        Real c = h[i][im1];
        h[i][im] = t1 * a + t2 * c;
        h[i][im1] = t1 * c - t2 * a;
      }
    }

    for (std::size_t i = im1; i < n; ++i) {
      reduce_row(i, i == im1 ? i - 1 : im1);
    }

    MinEntry m = min_abs(y);
    if (m.value < eps) return finish_with_candidate(m.index);
    if (m.value < teps) {
      out.status = PslqStatus::kPrecisionExhausted;
      out.exclusion_bound = lattice_bound();
      return out;
    }
    Real bound = lattice_bound();
    if (bound > out.exclusion_bound) out.exclusion_bound = bound;
    if (out.exclusion_bound > bound_target) {
      out.status = PslqStatus::kNoRelationWithinBound;
      return out;
    }
  }

  out.status = PslqStatus::kIterationLimit;
  return out;
}

}  // namespace dilog7
