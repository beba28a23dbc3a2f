#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

/*
 * The catalogue of verifiable identities.  Each id maps to exactly one
 * verification routine; the enum order fixes the report order.
 *
 *   COFFEY_12A     I7 quadrature vs Coffey's Clausen closed form
 *   NEW_16         I7 quadrature vs the Clausen-triplet closed form
 *   L7_THREE_WAYS  L_-7(2) by direct series / Hurwitz sum / Clausen form
 *   CONJ_13        I7 = L_-7(2)                    (conjecture)
 *   CONJ_15        L_-7(2) = Clausen-triplet form  (conjecture)
 *   EQ_37_CHAIN    split-integral sum vs its two-Clausen reduction
 *   EQ_38_FINAL    (7 sqrt7/24) I7 vs the reduced triplet bracket
 *   LEMMA1_A/B     log-tangent-ratio integrals vs closed forms
 *   ANTIDERIV_35   antiderivative of ln(tan theta + tan phi)
 *   COFFEY_LOGSIN  log-sin integral vs its Clausen form
 *   COFFEY_LOGCOS  log-cos integral vs its Clausen form
 *   MULT_FORMULA   Cl2 multiplication formula
 */
enum class IdentityId {
  COFFEY_12A,
  NEW_16,
  L7_THREE_WAYS,
  CONJ_13,
  CONJ_15,
  EQ_37_CHAIN,
  EQ_38_FINAL,
  LEMMA1_A,
  LEMMA1_B,
  ANTIDERIV_35,
  COFFEY_LOGSIN,
  COFFEY_LOGCOS,
  MULT_FORMULA,
};

// Proved identities report as theorems; numeric-evidence-only ones stay
// conjectures and are never reported with stronger vocabulary than
// digits of agreement.
enum class IdentityKind { kTheorem, kConjecture };

const std::vector<IdentityId>& all_identities();
std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);
IdentityKind kind(IdentityId id);

struct IdentityReport {
  IdentityId id = IdentityId::COFFEY_12A;
  Real lhs;
  Real rhs;
  int digits_agreed = 0;
  int required_digits = 0;
  bool passed = false;
  std::chrono::milliseconds wall{0};
  std::string error;  // nonempty: execution error (never a silent pass)
};

// Coffey's closed form for I7,
//   (12/(7 sqrt7)) [Cl2(2 w+) + 2 Cl2(th+) - Cl2(2 w+ + 2 th+)],
// with w+ = arctan(sqrt7) - 2 pi/3 and th+ = arctan(sqrt7/3).
Real closed_form_coffey(const PrecisionContext& ctx);

// The Clausen-triplet closed form for I7,
//   (4/(7 sqrt7)) [3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)].
Real closed_form_new(const PrecisionContext& ctx);

// floor(-log10(|x-y| / max(|x|, 1))), floored at 0; ctx.digits() when the
// values are identical.
int digits_agreed(const Real& x, const Real& y, const PrecisionContext& ctx);

/*
 * Runs one identity check at the given context.  required_digits must not
 * exceed ctx.digits() - 10.  Identities verified on a parameter grid
 * report their worst pair.  Quadrature non-convergence is captured in the
 * report's error field together with passed = false.
 */
IdentityReport verify(IdentityId id, const PrecisionContext& ctx, int required_digits,
                      int max_levels = 14);

}  // namespace dilog7
