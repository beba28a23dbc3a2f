#pragma once

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

// A plane angle in radians.  Construction rejects non-finite values; no
// range restriction, reduction happens inside the evaluators.
class Angle {
 public:
  explicit Angle(Real radians) : theta_(std::move(radians)) {
    if (!theta_.is_finite()) throw DomainError("angle must be finite");
  }
  const Real& radians() const { return theta_; }

 private:
  Real theta_;
};

enum class Method { kSeries, kIntegral, kFunctional };

// A function value together with an absolute error bound and the route
// that produced it.
struct EvalResult {
  Real value;
  Real error_bound;
  Method method;
};

/*
 * Clausen function of order two,
 *
 *   Cl2(theta) = sum_{m>=1} sin(m theta)/m^2
 *              = -integral_0^theta ln|2 sin(t/2)| dt,
 *
 * odd and 2*pi-periodic, vanishing at integer multiples of pi.
 */

// Primary evaluator: range-reduces theta to (-pi, pi] in extended
// precision, then sums the log-weighted power series with zeta(2k)
// coefficients.  error_bound holds the computed series tail plus rounding
// slop and is <= ctx.tolerance() on return.
EvalResult cl2(const Angle& theta, const PrecisionContext& ctx);

inline EvalResult cl2(const Real& theta, const PrecisionContext& ctx) {
  return cl2(Angle(theta), ctx);
}

// Literal partial sum sum_{m=1}^{n_terms} sin(m theta)/m^2 at the
// precision of theta.  Slow; serves as an independent oracle.
Real cl2_series_partial(const Angle& theta, unsigned long n_terms);

// Independent route: tanh-sinh quadrature of the defining integral, with
// the logarithmic singularity kept at the interval endpoint.  Requires
// |theta| <= 2*pi.  Throws ConvergenceError if the quadrature fails.
EvalResult cl2_via_integral(const Angle& theta, const PrecisionContext& ctx);

// Right side of the multiplication formula:
//   m * sum_{l=0}^{m-1} Cl2(theta + 2*pi*l/m),
// which equals Cl2(m*theta).
Real multiplication_rhs(const Angle& theta, unsigned m, const PrecisionContext& ctx);

// sum_{l=0}^{m-1} sin(n*(theta + 2*pi*l/m)) by direct summation, at the
// precision of theta.  Vanishes unless m | n, where it equals m*sin(n*theta).
Real character_sine_sum(unsigned long n, unsigned long m, const Angle& theta);

}  // namespace dilog7
