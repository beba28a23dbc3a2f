#pragma once

#include <optional>
#include <vector>

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

// A detected integer relation sum_i c_i v_i ~ 0.  Coefficients are
// primitive (gcd 1) with the first nonzero entry positive; residual is
// the re-verified |sum c_i v_i| over the original input values.
struct IntegerRelation {
  std::vector<long> coefficients;
  Real residual;
  long norm_bound = 0;
};

enum class PslqStatus {
  kRelationFound,
  // No relation with max|c_i| <= norm_bound exists: the running lattice
  // bound excludes every candidate of that size.
  kNoRelationWithinBound,
  // min |y| entered the ambiguous band above detection accuracy: the
  // working precision cannot decide.
  kPrecisionExhausted,
  kIterationLimit,
};

struct PslqResult {
  PslqStatus status = PslqStatus::kIterationLimit;
  std::optional<IntegerRelation> relation;
  // Lower bound on the Euclidean norm of any integer relation of the
  // inputs, valid whenever no relation was returned.
  Real exclusion_bound;
  int iterations = 0;
};

/*
 * PSLQ integer relation detection over `values` at the context's working
 * precision, after normalising by the largest-magnitude entry.  Detection
 * accepts min|y| below 10^-(digits-15); any candidate is re-verified by a
 * direct dot product against the original values before being returned.
 * Needs values.size() >= 2 and ctx.digits() >= 20 * values.size().
 */
PslqResult pslq(const std::vector<Real>& values, const PrecisionContext& ctx,
                long norm_bound, long max_iterations = 20000);

}  // namespace dilog7
