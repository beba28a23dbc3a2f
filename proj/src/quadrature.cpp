#include "dilog7/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "dilog7/constants.hpp"

namespace dilog7 {

namespace {

// Compensated accumulator; with the fixed node ordering this makes the
// final reduction independent of how node evaluations were scheduled.
struct KahanSum {
  Real s, c;
  explicit KahanSum(Prec bits) : s(Real::of(0, bits)), c(Real::of(0, bits)) {}
  void add(const Real& term) {
    Real y = term - c;
    Real t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

QuadratureResult tanh_sinh_impl(const Integrand& f, const Real& a, const Real& b,
                                const PrecisionContext& ctx, int max_levels) {
  const Prec W = ctx.work_bits();
  const int workd = ctx.digits() + ctx.guard();

  const Real halfpi = mul_2si(ctx.pi(), -1);
  const Real halfw = mul_2si(b - a, -1);
  const Real level_tol = Real::pow10(-(ctx.digits() + 2), W);

  // Weights decay like exp(-pi sinh t); truncate the grid where they fall
  // below the working floor.
  const double tmax =
      std::asinh(((workd + 6) * 2.302585092994046) / 3.141592653589793) + 0.25;

  long nodes = 0;
  KahanSum sum(W);

  // Node abscissae never coincide with an endpoint: once the distance
  // drops below an ulp, x is pinned one step inside.  Integrands with an
  // endpoint singularity read the exact distance from the QuadNode, so
  // the pin only affects the smooth-direction argument.
  auto pin_above = [](const Real& lo, Real x) {
    if (x <= lo) {
      x = lo;
      mpfr_nextabove(x.raw());
    }
    return x;
  };
  auto pin_below = [](const Real& hi, Real x) {
    if (x >= hi) {
      x = hi;
      mpfr_nextbelow(x.raw());
    }
    return x;
  };
  auto feval = [&f](const QuadNode& node) {
    Real v = f(node);
    if (!v.is_finite()) {
      throw DomainError("integrand returned a non-finite value at a quadrature node");
    }
    return v;
  };

  // Evaluates the node pair at +-t (or the single centre node for t = 0)
  // and adds the weighted contributions in ascending-|t| order.
  auto eval_at = [&](const Real& t) {
    Real et = exp(t);
    Real inv_et = 1 / et;
    Real sh = mul_2si(et - inv_et, -1);
    Real ch = mul_2si(et + inv_et, -1);
    Real u = halfpi * sh;
    Real eu = exp(u);
    Real inv_eu = 1 / eu;
    Real denom = eu + inv_eu;  // 2 cosh u
    Real w = mul_2si(halfpi * ch / (denom * denom), 2);
    Real d_near = mul_2si(halfw * inv_eu / denom, 1);  // halfw (1 - tanh u)
    Real d_far = mul_2si(halfw * eu / denom, 1);       // halfw (1 + tanh u)

    if (t.is_zero()) {
      Real x = a + halfw;
      sum.add(w * feval(QuadNode{x, d_near, d_far}));
      ++nodes;
      return;
    }
    {
      Real x = pin_below(b, b - d_near);  // node at +t, close to b
      sum.add(w * feval(QuadNode{x, d_far, d_near}));
    }
    {
      Real x = pin_above(a, a + d_near);  // node at -t, close to a
      sum.add(w * feval(QuadNode{x, d_near, d_far}));
    }
    nodes += 2;
  };

  QuadratureResult out;
  out.value = Real::of(0, W);
  out.error_estimate = Real::of(0, W);
  std::optional<Real> prev;

  for (int level = 0; level < max_levels; ++level) {
    const long den = 1L << level;
    const long jmax = static_cast<long>(std::ceil(tmax * static_cast<double>(den)));
    if (level == 0) {
      for (long j = 0; j <= jmax; ++j) eval_at(Real::of(j, W));
    } else {
      for (long j = 1; j <= jmax; j += 2) eval_at(mul_2si(Real::of(j, W), -level));
    }
    Real I = mul_2si(sum.s, -level) * halfw;  // h * halfw * sum of w*f
    out.levels_used = level + 1;
    out.nodes_evaluated = nodes;
    out.value = I;
    if (prev) {
      out.error_estimate = abs(I - *prev);
      if (level >= 2 && out.error_estimate <= level_tol) {
        out.converged = true;
        return out;
      }
    }
    prev = std::move(I);
  }
  return out;
}

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx, int max_levels) {
  if (!(a < b)) throw DomainError("tanh_sinh requires a < b");
  if (max_levels < 1) throw ConfigError("max_levels must be at least 1");
  for (const Real& s : f.interior_singularities()) {
    if (a < s && s < b) {
      throw DomainError("interior singular point at " + s.str(8) +
                        " must be split by the caller");
    }
  }
  return tanh_sinh_impl(f, a, b, ctx, max_levels);
}

QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx, int max_levels) {
  if (!(a < b)) throw DomainError("integrate requires a < b");
  std::vector<Real> cuts;
  for (const Real& s : f.interior_singularities()) {
    if (a < s && s < b) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end(), [](const Real& p, const Real& q) { return p < q; });
  cuts.push_back(b);

  const Prec W = ctx.work_bits();
  QuadratureResult out;
  out.value = Real::of(0, W);
  out.error_estimate = Real::of(0, W);
  out.converged = true;
  Real lo = a;
  for (const Real& hi : cuts) {
    QuadratureResult piece = tanh_sinh_impl(f, lo, hi, ctx, max_levels);
    out.value = out.value + piece.value;
    out.error_estimate = out.error_estimate + piece.error_estimate;
    out.levels_used = std::max(out.levels_used, piece.levels_used);
    out.nodes_evaluated += piece.nodes_evaluated;
    out.converged = out.converged && piece.converged;
    lo = hi;
  }
  return out;
}

QuadratureResult integral_i7(const PrecisionContext& ctx, int max_levels) {
  Constants c = constants(ctx);
  Real third_pi = c.pi / 3;
  Real half_pi = mul_2si(c.pi, -1);
  Real two_phi = mul_2si(c.phi7, 1);

  // On (pi/3, phi7) the singularity sits at the upper endpoint; with
  // theta = phi7 - from_b the sign-definite integrand is
  // ln(sin(theta + phi7)) - ln(sin(phi7 - theta)).
  Integrand left([two_phi](const QuadNode& n) {
    return log(sin(two_phi - n.from_b)) - log(sin(n.from_b));
  });
  // On (phi7, pi/2), theta = phi7 + from_a; the integrand tends to 0 at
  // pi/2 where tan(theta) blows up but the ratio tends to 1.
  Integrand right([two_phi](const QuadNode& n) {
    return log(sin(two_phi + n.from_a)) - log(sin(n.from_a));
  });

  QuadratureResult r1 = tanh_sinh(left, third_pi, c.phi7, ctx, max_levels);
  QuadratureResult r2 = tanh_sinh(right, c.phi7, half_pi, ctx, max_levels);

  Real scale = 24 / (7 * c.sqrt7);
  QuadratureResult out;
  out.value = scale * (r1.value + r2.value);
  out.error_estimate = scale * (r1.error_estimate + r2.error_estimate);
  out.levels_used = std::max(r1.levels_used, r2.levels_used);
  out.nodes_evaluated = r1.nodes_evaluated + r2.nodes_evaluated;
  out.converged = r1.converged && r2.converged;
  return out;
}

QuadratureResult lemma1_integral_a(const Angle& phi, const Angle& x,
                                   const PrecisionContext& ctx, int max_levels) {
  const Real& p = phi.radians();
  const Real& q = x.radians();
  Real half_pi = mul_2si(ctx.pi(), -1);
  if (!(p > 0 && p < q && q <= half_pi)) {
    throw DomainError("lemma1_integral_a requires 0 < phi < x <= pi/2");
  }
  Real two_phi = mul_2si(p, 1);
  Integrand f([two_phi](const QuadNode& n) {
    return log(sin(two_phi + n.from_a)) - log(sin(n.from_a));
  });
  return tanh_sinh(f, p, q, ctx, max_levels);
}

Real lemma1_closed_a(const Angle& phi, const Angle& x, const PrecisionContext& ctx) {
  Real p2 = mul_2si(phi.radians(), 1);
  Real x2 = mul_2si(x.radians(), 1);
  Real v = -cl2(x2 + p2, ctx).value + cl2(x2 - p2, ctx).value +
           cl2(mul_2si(p2, 1), ctx).value;
  return mul_2si(v, -1);
}

QuadratureResult lemma1_integral_b(const Angle& phi, const Angle& x,
                                   const PrecisionContext& ctx, int max_levels) {
  const Real& p = phi.radians();
  const Real& q = x.radians();
  Real half_pi = mul_2si(ctx.pi(), -1);
  if (!(q > 0 && q < p && p < half_pi)) {
    throw DomainError("lemma1_integral_b requires 0 < x < phi < pi/2");
  }
  Real two_phi = mul_2si(p, 1);
  Integrand f([two_phi](const QuadNode& n) {
    return log(sin(two_phi - n.from_b)) - log(sin(n.from_b));
  });
  return tanh_sinh(f, q, p, ctx, max_levels);
}

Real lemma1_closed_b(const Angle& phi, const Angle& x, const PrecisionContext& ctx) {
  Real p2 = mul_2si(phi.radians(), 1);
  Real x2 = mul_2si(x.radians(), 1);
  Real v = cl2(x2 + p2, ctx).value - cl2(x2 - p2, ctx).value -
           cl2(mul_2si(p2, 1), ctx).value;
  return mul_2si(v, -1);
}

Real antiderivative_check_35(const Angle& phi, const Angle& t1, const Angle& t2,
                             const PrecisionContext& ctx, int max_levels) {
  const Real& p = phi.radians();
  const Real& lo = t1.radians();
  const Real& hi = t2.radians();
  Real half_pi = mul_2si(ctx.pi(), -1);
  if (!(p > 0 && p < half_pi)) throw DomainError("phi must lie in (0, pi/2)");
  if (hi < lo) throw DomainError("t1 must not exceed t2");
  // tan(theta) + tan(phi) = sin(theta+phi)/(cos(theta) cos(phi)) must stay
  // positive and finite on [t1, t2].
  if (!(abs(lo) < half_pi && abs(hi) < half_pi && lo + p > 0 && hi + p < ctx.pi())) {
    throw DomainError("integrand must be regular on [t1, t2]");
  }

  const Prec W = ctx.work_bits();
  if (lo == hi) return Real::of(0, W);

  Real log_cos_phi = log(cos(p));
  Integrand f([p, log_cos_phi](const QuadNode& n) {
    return log(sin(n.x + p)) - log(cos(n.x)) - log_cos_phi;
  });
  QuadratureResult quad = tanh_sinh(f, lo, hi, ctx, max_levels);
  if (!quad.converged) {
    throw ConvergenceError("antiderivative check quadrature did not converge");
  }

  auto F = [&](const Real& t) {
    Real t2p = mul_2si(t + p, 1);
    Real pi_minus_2t = ctx.pi() - mul_2si(t, 1);
    return -t * log_cos_phi - mul_2si(cl2(t2p, ctx).value, -1) -
           mul_2si(cl2(pi_minus_2t, ctx).value, -1);
  };
  return abs(quad.value - (F(hi) - F(lo)));
}

}  // namespace dilog7
