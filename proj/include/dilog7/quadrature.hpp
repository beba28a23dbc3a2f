#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dilog7/clausen.hpp"
#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

inline constexpr int kDefaultMaxLevels = 14;

/*
 * One abscissa of a quadrature rule.  `x` is the node itself; `from_a`
 * and `from_b` are its distances to the interval endpoints, computed in a
 * cancellation-free form.  Integrands with an endpoint singularity must
 * evaluate through the distance of the singular endpoint: near the ends
 * the distances retain full relative accuracy long after `x` itself has
 * rounded onto the endpoint.
 */
struct QuadNode {
  const Real& x;
  const Real& from_a;
  const Real& from_b;
};

// A real integrand with an optional list of declared interior singular
// points (integrable, logarithmic).  tanh_sinh() only accepts endpoint
// singularities; integrate() splits at the declared points first.
class Integrand {
 public:
  using Fn = std::function<Real(const QuadNode&)>;

  explicit Integrand(Fn f) : f_(std::move(f)) {}
  Integrand(Fn f, std::vector<Real> interior_singularities)
      : f_(std::move(f)), singular_(std::move(interior_singularities)) {}

  Real operator()(const QuadNode& node) const { return f_(node); }
  const std::vector<Real>& interior_singularities() const { return singular_; }

 private:
  Fn f_;
  std::vector<Real> singular_;
};

struct QuadratureResult {
  Real value;
  Real error_estimate;   // last level-to-level difference
  int levels_used = 0;
  long nodes_evaluated = 0;
  bool converged = false;
};

/*
 * Tanh-sinh (double-exponential) quadrature of f over (a, b).
 *
 * Abscissas x = tanh((pi/2) sinh t) on trapezoidal grids h = 2^-level
 * with node reuse between levels; the grid is truncated where the weights
 * fall below the working-precision floor, so no node ever lands on an
 * endpoint.  Converged when two successive levels agree within
 * 10^-(digits+2); on non-convergence the result carries the best
 * estimate with converged = false.  Summation follows a fixed
 * ascending-|t| order with compensated accumulation, so equal inputs give
 * bit-identical results.
 *
 * Throws DomainError if a >= b, if f declares a singular point strictly
 * inside (a, b), or if f returns NaN at a node.
 */
QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx,
                           int max_levels = kDefaultMaxLevels);

// Splits (a, b) at the integrand's declared interior singular points and
// sums tanh_sinh over the pieces.
QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx,
                           int max_levels = kDefaultMaxLevels);

/*
 * The dilogarithmic integral
 *
 *   I7 = (24/(7 sqrt(7))) integral_{pi/3}^{pi/2}
 *           ln|(tan(theta) + sqrt(7)) / (tan(theta) - sqrt(7))| dtheta,
 *
 * evaluated as two tanh-sinh integrals split at the interior singularity
 * phi7 = arctan(sqrt(7)), each in its sign-definite form
 * ln(sin(theta + phi7) / sin(|theta - phi7|)).
 */
QuadratureResult integral_i7(const PrecisionContext& ctx,
                             int max_levels = kDefaultMaxLevels);

/*
 * The two log-tangent-ratio integrals with a known Clausen closed form.
 *
 *   a)  integral_phi^x ln((tan(theta)+tan(phi))/(tan(theta)-tan(phi))) dtheta
 *         = -Cl2(2x+2phi)/2 + Cl2(2x-2phi)/2 + Cl2(4phi)/2,
 *       for 0 < phi < x <= pi/2 (singular at the lower endpoint);
 *   b)  integral_x^phi ln((tan(phi)+tan(theta))/(tan(phi)-tan(theta))) dtheta
 *         =  Cl2(2x+2phi)/2 - Cl2(2x-2phi)/2 - Cl2(4phi)/2,
 *       for 0 < x < phi < pi/2 (singular at the upper endpoint).
 */
QuadratureResult lemma1_integral_a(const Angle& phi, const Angle& x,
                                   const PrecisionContext& ctx,
                                   int max_levels = kDefaultMaxLevels);
Real lemma1_closed_a(const Angle& phi, const Angle& x, const PrecisionContext& ctx);
QuadratureResult lemma1_integral_b(const Angle& phi, const Angle& x,
                                   const PrecisionContext& ctx,
                                   int max_levels = kDefaultMaxLevels);
Real lemma1_closed_b(const Angle& phi, const Angle& x, const PrecisionContext& ctx);

/*
 * Residual |integral_{t1}^{t2} ln(tan(theta)+tan(phi)) dtheta - (F(t2)-F(t1))|
 * for the antiderivative
 *   F(theta) = -theta ln(cos(phi)) - Cl2(2 theta + 2 phi)/2 - Cl2(pi - 2 theta)/2.
 * Requires tan(theta) + tan(phi) > 0 on [t1, t2] with no singularity inside.
 */
Real antiderivative_check_35(const Angle& phi, const Angle& t1, const Angle& t2,
                             const PrecisionContext& ctx,
                             int max_levels = kDefaultMaxLevels);

}  // namespace dilog7
