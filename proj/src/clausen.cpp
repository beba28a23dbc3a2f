#include "dilog7/clausen.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>

#include "dilog7/quadrature.hpp"

namespace dilog7 {

namespace {

/*
 * zeta(2k) coefficients for the accelerated series, cached per working
 * precision.  Entries are write-once; a deque keeps references to already
 * written elements stable while the table grows, so readers that obtained
 * the table through ensure() can index it without further locking.
 */
class Zeta2kCache {
 public:
  const std::deque<Real>& ensure(Prec bits, std::size_t kmax) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& table = by_prec_[bits];
    while (table.size() < kmax) {
      unsigned long k = static_cast<unsigned long>(table.size()) + 1;
      table.push_back(Real::zeta_ui(2 * k, bits));
    }
    return table;
  }

 private:
  std::mutex mu_;
  std::map<Prec, std::deque<Real>> by_prec_;
};

Zeta2kCache g_zeta2k;

// theta reduced modulo 2*pi into (-pi, pi], carried out with enough extra
// bits that the reduction of large arguments stays exact to working
// precision.
Real reduce_angle(const Real& theta, const PrecisionContext& ctx) {
  long extra = 16;
  if (!theta.is_zero() && theta.is_finite()) {
    long e = mpfr_get_exp(theta.raw());
    if (e > 0) extra += e;
  }
  const Prec xbits = ctx.work_bits() + extra;
  Real wide(xbits);
  mpfr_set(wide.raw(), theta.raw(), MPFR_RNDN);
  Real two_pi = mul_2si(Real::pi(xbits), 1);
  Real r = remainder(wide, two_pi);  // in [-pi, pi]
  if (r == -mul_2si(two_pi, -1)) r = r + two_pi;
  Real out(ctx.work_bits());
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

struct SeriesResult {
  Real value;
  Real error_bound;
};

/*
 * Cl2 on the reduced range [0, pi] via
 *
 *   Cl2(u) = u - u ln u + u sum_{k>=1} zeta(2k)/(k(2k+1)) (u/(2 pi))^(2k),
 *
 * which converges at least like 4^-k after reduction.  The reported bound
 * is the crude geometric tail (the coefficients are below 1 and
 * decreasing) plus rounding slop.
 */
SeriesResult cl2_series_reduced(const Real& u, const PrecisionContext& ctx) {
  const Prec W = ctx.work_bits();
  if (u.is_zero()) return {Real::of(0, W), Real::of(0, W)};

  Real q = pow_si(u / mul_2si(ctx.pi(), 1), 2);
  Real tol = ctx.internal_tolerance();
  Real geo = q / (1 - q);

  double qd = q.to_double();
  std::size_t kmax = 8;
  if (qd > 1e-300) {
    kmax = static_cast<std::size_t>(
               (ctx.digits() + ctx.guard()) * 2.302585092994046 / -std::log(qd)) +
           8;
  }
  const std::deque<Real>* zeta = &g_zeta2k.ensure(W, kmax);

  Real sum = Real::of(0, W);
  Real p = q;  // q^k
  Real tail = p * geo;
  long k = 1;
  for (;; ++k) {
    if (static_cast<std::size_t>(k) > kmax) {
      kmax += 32;
      zeta = &g_zeta2k.ensure(W, kmax);
    }
    sum = sum + (*zeta)[static_cast<std::size_t>(k - 1)] * p / (k * (2 * k + 1));
    tail = p * geo;
    if (tail < tol) break;
    p = p * q;
  }

  Real value = u * (1 - log(u)) + u * sum;
  Real bound = u * tail + (k + 16) * ctx.work_eps();
  return {std::move(value), std::move(bound)};
}

}  // namespace

EvalResult cl2(const Angle& theta, const PrecisionContext& ctx) {
  Real r = reduce_angle(theta.radians(), ctx);
  int sign = r.sgn();
  SeriesResult s = cl2_series_reduced(abs(r), ctx);
  Real value = sign < 0 ? -s.value : std::move(s.value);
  return {std::move(value), std::move(s.error_bound), Method::kSeries};
}

Real cl2_series_partial(const Angle& theta, unsigned long n_terms) {
  const Prec W = theta.radians().precision();
  Real sum = Real::of(0, W);
  if (n_terms == 0) return sum;
  // sin(m theta) by incremental angle addition: two multiplies per term
  // instead of a full sine, exactly the written partial sum otherwise.
  Real s1 = sin(theta.radians());
  Real c1 = cos(theta.radians());
  Real sm = s1;
  Real cm = c1;
  sum = sum + s1;
  for (unsigned long m = 2; m <= n_terms; ++m) {
    Real s_next = sm * c1 + cm * s1;
    Real c_next = cm * c1 - sm * s1;
    sm = std::move(s_next);
    cm = std::move(c_next);
    sum = sum + sm / static_cast<long>(m * m);
  }
  return sum;
}

EvalResult cl2_via_integral(const Angle& theta, const PrecisionContext& ctx) {
  const Real& th = theta.radians();
  Real two_pi = mul_2si(ctx.pi(), 1);
  if (abs(th) > two_pi) {
    throw DomainError("cl2_via_integral requires |theta| <= 2*pi");
  }
  int sign = th.sgn();
  if (sign == 0) return {ctx.real(0), ctx.real(0), Method::kIntegral};

  // Cl2(t) = -integral_0^t ln(2 sin(x/2)) dx for t in (0, 2*pi]; the log
  // singularity sits at the lower endpoint, reached through from_a.
  Integrand f([](const QuadNode& n) {
    return log(mul_2si(sin(mul_2si(n.from_a, -1)), 1));
  });
  QuadratureResult q = tanh_sinh(f, ctx.real(0), abs(th), ctx);
  if (!q.converged) {
    throw ConvergenceError("clausen integral did not converge (error estimate " +
                           q.error_estimate.str(3) + ")");
  }
  Real value = sign < 0 ? std::move(q.value) : -q.value;
  return {std::move(value), std::move(q.error_estimate), Method::kIntegral};
}

Real multiplication_rhs(const Angle& theta, unsigned m, const PrecisionContext& ctx) {
  if (m == 0) throw DomainError("multiplication_rhs requires m >= 1");
  Real two_pi = mul_2si(ctx.pi(), 1);
  Real sum = ctx.real(0);
  for (unsigned l = 0; l < m; ++l) {
    Real shift = two_pi * static_cast<long>(l) / static_cast<long>(m);
    sum = sum + cl2(theta.radians() + shift, ctx).value;
  }
  return sum * static_cast<long>(m);
}

Real character_sine_sum(unsigned long n, unsigned long m, const Angle& theta) {
  if (n == 0 || m == 0) throw DomainError("character_sine_sum requires n, m >= 1");
  const Prec W = theta.radians().precision();
  Real two_pi = mul_2si(Real::pi(W), 1);
  Real sum = Real::of(0, W);
  for (unsigned long l = 0; l < m; ++l) {
    Real arg = (theta.radians() + two_pi * static_cast<long>(l) / static_cast<long>(m)) *
               static_cast<long>(n);
    sum = sum + sin(arg);
  }
  return sum;
}

}  // namespace dilog7
