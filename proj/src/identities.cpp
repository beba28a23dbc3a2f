#include "dilog7/identities.hpp"

#include <array>
#include <utility>

#include "dilog7/clausen.hpp"
#include "dilog7/constants.hpp"
#include "dilog7/quadrature.hpp"
#include "dilog7/zeta.hpp"

namespace dilog7 {

namespace {

struct IdentityInfo {
  IdentityId id;
  const char* name;
  IdentityKind kind;
};

constexpr std::array<IdentityInfo, 13> kIdentityTable{{
    {IdentityId::COFFEY_12A, "COFFEY_12A", IdentityKind::kTheorem},
    {IdentityId::NEW_16, "NEW_16", IdentityKind::kTheorem},
    {IdentityId::L7_THREE_WAYS, "L7_THREE_WAYS", IdentityKind::kTheorem},
    {IdentityId::CONJ_13, "CONJ_13", IdentityKind::kConjecture},
    {IdentityId::CONJ_15, "CONJ_15", IdentityKind::kConjecture},
    {IdentityId::EQ_37_CHAIN, "EQ_37_CHAIN", IdentityKind::kTheorem},
    {IdentityId::EQ_38_FINAL, "EQ_38_FINAL", IdentityKind::kTheorem},
    {IdentityId::LEMMA1_A, "LEMMA1_A", IdentityKind::kTheorem},
    {IdentityId::LEMMA1_B, "LEMMA1_B", IdentityKind::kTheorem},
    {IdentityId::ANTIDERIV_35, "ANTIDERIV_35", IdentityKind::kTheorem},
    {IdentityId::COFFEY_LOGSIN, "COFFEY_LOGSIN", IdentityKind::kTheorem},
    {IdentityId::COFFEY_LOGCOS, "COFFEY_LOGCOS", IdentityKind::kTheorem},
    {IdentityId::MULT_FORMULA, "MULT_FORMULA", IdentityKind::kTheorem},
}};

// Worst-agreeing (lhs, rhs) pair over a verification grid.
struct PairCollector {
  const PrecisionContext& ctx;
  Real lhs;
  Real rhs;
  int digits = -1;

  explicit PairCollector(const PrecisionContext& c) : ctx(c) {}
  void consider(const Real& a, const Real& b) {
    int d = digits_agreed(a, b, ctx);
    if (digits < 0 || d < digits) {
      digits = d;
      lhs = a;
      rhs = b;
    }
  }
};

void require_converged(const QuadratureResult& q, const char* what) {
  if (!q.converged) {
    throw ConvergenceError(std::string(what) + " quadrature did not converge (error estimate " +
                           q.error_estimate.str(3) + ", levels " +
                           std::to_string(q.levels_used) + ")");
  }
}

// Bracket of the two-Clausen reduction of the split integral:
//   [Cl2(2 phi7 + 2 pi/3) + Cl2(2 phi7 - 2 pi/3)]/2 - Cl2(pi + 2 phi7).
Real chain_two_term_bracket(const PrecisionContext& ctx) {
  Constants c = constants(ctx);
  Real two_phi = mul_2si(c.phi7, 1);
  Real two_thirds_pi = mul_2si(c.pi, 1) / 3;
  Real half_sum =
      mul_2si(cl2(two_phi + two_thirds_pi, ctx).value + cl2(two_phi - two_thirds_pi, ctx).value, -1);
  return half_sum - cl2(c.pi + two_phi, ctx).value;
}

// The fully reduced bracket: [3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)]/6.
Real chain_triplet_bracket(const PrecisionContext& ctx) {
  Constants c = constants(ctx);
  Real two_phi = mul_2si(c.phi7, 1);
  Real v = 3 * cl2(two_phi, ctx).value - 3 * cl2(mul_2si(two_phi, 1), ctx).value +
           cl2(3 * two_phi, ctx).value;
  return v / 6;
}

void run_identity(IdentityId id, const PrecisionContext& ctx, int max_levels,
                  PairCollector& pairs) {
  Constants c = constants(ctx);
  switch (id) {
    case IdentityId::COFFEY_12A: {
      QuadratureResult q = integral_i7(ctx, max_levels);
      require_converged(q, "I7");
      pairs.consider(q.value, closed_form_coffey(ctx));
      return;
    }
    case IdentityId::NEW_16: {
      QuadratureResult q = integral_i7(ctx, max_levels);
      require_converged(q, "I7");
      pairs.consider(q.value, closed_form_new(ctx));
      return;
    }
    case IdentityId::L7_THREE_WAYS: {
      Real s = ctx.real(2);
      Real direct = l_minus7_direct(s, ctx).value;
      Real hurwitz = dirichlet_l(-7, s, ctx).value;
      Real clausen = l_minus7_clausen(ctx).value;
      pairs.consider(direct, hurwitz);
      pairs.consider(direct, clausen);
      pairs.consider(hurwitz, clausen);
      return;
    }
    case IdentityId::CONJ_13: {
      QuadratureResult q = integral_i7(ctx, max_levels);
      require_converged(q, "I7");
      pairs.consider(q.value, dirichlet_l(-7, ctx.real(2), ctx).value);
      return;
    }
    case IdentityId::CONJ_15: {
      pairs.consider(dirichlet_l(-7, ctx.real(2), ctx).value, closed_form_new(ctx));
      return;
    }
    case IdentityId::EQ_37_CHAIN: {
      Real split_sum = lemma1_closed_b(Angle(c.phi7), Angle(c.pi / 3), ctx) +
                       lemma1_closed_a(Angle(c.phi7), Angle(mul_2si(c.pi, -1)), ctx);
      pairs.consider(split_sum, chain_two_term_bracket(ctx));
      return;
    }
    case IdentityId::EQ_38_FINAL: {
      QuadratureResult q = integral_i7(ctx, max_levels);
      require_converged(q, "I7");
      Real scaled = 7 * c.sqrt7 * q.value / 24;
      pairs.consider(scaled, chain_triplet_bracket(ctx));
      return;
    }
    case IdentityId::LEMMA1_A: {
      const std::pair<double, double> generic[] = {{0.5235987755982988, 0.7853981633974483},
                                                   {0.3, 0.9},
                                                   {1.0, 1.3}};
      for (auto [p, x] : generic) {
        Angle phi(ctx.real(p)), xx(ctx.real(x));
        QuadratureResult q = lemma1_integral_a(phi, xx, ctx, max_levels);
        require_converged(q, "lemma 1a");
        pairs.consider(q.value, lemma1_closed_a(phi, xx, ctx));
      }
      // the split-integral instance, upper limit at pi/2
      Angle phi(c.phi7), xx(mul_2si(c.pi, -1));
      QuadratureResult q = lemma1_integral_a(phi, xx, ctx, max_levels);
      require_converged(q, "lemma 1a");
      pairs.consider(q.value, lemma1_closed_a(phi, xx, ctx));
      return;
    }
    case IdentityId::LEMMA1_B: {
      const std::pair<double, double> generic[] = {{0.6283185307179586, 0.39269908169872414},
                                                   {1.1, 0.4},
                                                   {1.35, 0.7}};
      for (auto [p, x] : generic) {
        Angle phi(ctx.real(p)), xx(ctx.real(x));
        QuadratureResult q = lemma1_integral_b(phi, xx, ctx, max_levels);
        require_converged(q, "lemma 1b");
        pairs.consider(q.value, lemma1_closed_b(phi, xx, ctx));
      }
      // the split-integral instance, lower limit at pi/3
      Angle phi(c.phi7), xx(c.pi / 3);
      QuadratureResult q = lemma1_integral_b(phi, xx, ctx, max_levels);
      require_converged(q, "lemma 1b");
      pairs.consider(q.value, lemma1_closed_b(phi, xx, ctx));
      return;
    }
    case IdentityId::ANTIDERIV_35: {
      const double grid[][3] = {{0.4487989505128276, 0.1, 0.6},
                                {0.6283185307179586, 0.2, 1.0},
                                {0.9, 0.3, 1.2},
                                {1.2, 0.05, 1.4},
                                {0.5, 0.7, 1.5}};
      for (auto [p, t1, t2] : grid) {
        Real residual = antiderivative_check_35(Angle(ctx.real(p)), Angle(ctx.real(t1)),
                                                Angle(ctx.real(t2)), ctx, max_levels);
        pairs.consider(residual, ctx.real(0));
      }
      return;
    }
    case IdentityId::COFFEY_LOGSIN: {
      // kappa integral_0^x ln(sin(kappa t) + sin(alpha)) dt
      //   = Cl2(alpha) - Cl2(kappa x + alpha) + Cl2(alpha - kappa x + pi)
      //     - Cl2(alpha + pi) - x kappa ln 2,
      // valid for kappa > 0 and |x| <= |alpha|.
      const Real ln2 = log(ctx.real(2));
      for (long kappa : {1L, 2L}) {
        for (long adenom : {5L, 3L}) {
          Real alpha = c.pi / adenom;
          for (double frac : {0.5, 0.9}) {
            Real x = alpha * ctx.real(frac);
            Real sin_alpha = sin(alpha);
            Integrand f([kappa, sin_alpha](const QuadNode& n) {
              return log(sin(n.x * kappa) + sin_alpha);
            });
            QuadratureResult q = tanh_sinh(f, ctx.real(0), x, ctx, max_levels);
            require_converged(q, "log-sin integral");
            Real kx = x * kappa;
            Real rhs = cl2(alpha, ctx).value - cl2(kx + alpha, ctx).value +
                       cl2(alpha - kx + c.pi, ctx).value - cl2(alpha + c.pi, ctx).value -
                       kx * ln2;
            pairs.consider(q.value * kappa, rhs);
          }
        }
      }
      return;
    }
    case IdentityId::COFFEY_LOGCOS: {
      // -kappa integral_0^x ln|cos(alpha) - cos(kappa t)| dt
      //   = Cl2(kappa x - alpha) + Cl2(kappa x + alpha) + x kappa ln 2,
      // with an interior singularity at t = alpha/kappa once x passes it.
      const Real ln2 = log(ctx.real(2));
      for (long kappa : {1L, 2L}) {
        for (long adenom : {5L, 3L}) {
          Real alpha = c.pi / adenom;
          Real cos_alpha = cos(alpha);
          for (double mult : {0.5, 1.5}) {
            Real x = alpha * ctx.real(mult) / kappa;
            Integrand f(
                [kappa, cos_alpha](const QuadNode& n) {
                  return log(abs(cos_alpha - cos(n.x * kappa)));
                },
                {alpha / kappa});
            QuadratureResult q = integrate(f, ctx.real(0), x, ctx, max_levels);
            require_converged(q, "log-cos integral");
            Real kx = x * kappa;
            Real rhs = cl2(kx - alpha, ctx).value + cl2(kx + alpha, ctx).value + kx * ln2;
            pairs.consider(-q.value * kappa, rhs);
          }
        }
      }
      return;
    }
    case IdentityId::MULT_FORMULA: {
      for (unsigned m : {2u, 3u, 5u}) {
        for (double t : {0.3, 1.1, 2.8}) {
          Angle theta(ctx.real(t));
          Real lhs = cl2(theta.radians() * static_cast<long>(m), ctx).value;
          pairs.consider(lhs, multiplication_rhs(theta, m, ctx));
        }
      }
      return;
    }
  }
  throw ConfigError("unknown identity id");
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& e : kIdentityTable) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string to_string(IdentityId id) {
  for (const auto& e : kIdentityTable) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

std::optional<IdentityId> parse_identity(const std::string& name) {
  for (const auto& e : kIdentityTable) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

IdentityKind kind(IdentityId id) {
  for (const auto& e : kIdentityTable) {
    if (e.id == id) return e.kind;
  }
  return IdentityKind::kConjecture;
}

Real closed_form_coffey(const PrecisionContext& ctx) {
  Constants c = constants(ctx);
  Real two_omega = mul_2si(c.omega_plus, 1);
  Real bracket = cl2(two_omega, ctx).value + mul_2si(cl2(c.theta_plus, ctx).value, 1) -
                 cl2(two_omega + mul_2si(c.theta_plus, 1), ctx).value;
  return 12 * bracket / (7 * c.sqrt7);
}

Real closed_form_new(const PrecisionContext& ctx) {
  Constants c = constants(ctx);
  Real two_phi = mul_2si(c.phi7, 1);
  Real bracket = 3 * cl2(two_phi, ctx).value - 3 * cl2(mul_2si(two_phi, 1), ctx).value +
                 cl2(3 * two_phi, ctx).value;
  return 4 * bracket / (7 * c.sqrt7);
}

int digits_agreed(const Real& x, const Real& y, const PrecisionContext& ctx) {
  if (x == y) return ctx.digits();
  Real diff = abs(x - y);
  // Normalisation by the larger magnitude keeps the count symmetric in
  // its arguments; for values that agree at all it matches max(|lhs|, 1).
  Real den = abs(x);
  Real ay = abs(y);
  if (ay > den) den = std::move(ay);
  if (den < 1) den = Real::of(1, den.precision());
  Real ratio = diff / den;
  if (ratio.is_zero()) return ctx.digits();
  // A one-ulp slack keeps boundary cases such as ratio = 10^-k, computed
  // in binary, from falling just under the floor.
  Real count = -log10(ratio) + Real::pow10(-ctx.digits(), ctx.work_bits());
  long d = floor(count).to_long();
  if (d < 0) d = 0;
  return static_cast<int>(d);
}

IdentityReport verify(IdentityId id, const PrecisionContext& ctx, int required_digits,
                      int max_levels) {
  if (required_digits > ctx.digits() - 10) {
    throw ConfigError("required digits must not exceed context digits - 10");
  }
  if (required_digits < 0) throw ConfigError("required digits must be nonnegative");

  IdentityReport report;
  report.id = id;
  report.required_digits = required_digits;

  auto start = std::chrono::steady_clock::now();
  PairCollector pairs(ctx);
  try {
    run_identity(id, ctx, max_levels, pairs);
    report.lhs = pairs.lhs;
    report.rhs = pairs.rhs;
    report.digits_agreed = pairs.digits;
    report.passed = pairs.digits >= required_digits;
  } catch (const ConvergenceError& e) {
    report.error = e.what();
    report.passed = false;
  }
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace dilog7
