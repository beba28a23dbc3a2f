#pragma once

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

/*
 * The handful of constants everything downstream is built from.  All are
 * evaluated from the big-float elementary-function layer at the context's
 * working precision, never from decimal literals.
 *
 *   phi7       = arctan(sqrt(7))            (the interior singularity of I7)
 *   theta_plus = arctan(sqrt(7)/3)
 *   omega_plus = arctan(sqrt(7)) - 2*pi/3   (== -arctan((2*sqrt(3)+sqrt(7))/5))
 */
struct Constants {
  Real pi;
  Real sqrt7;
  Real phi7;
  Real theta_plus;
  Real omega_plus;
};

Constants constants(const PrecisionContext& ctx);

// The equivalent arctangent form of omega_plus, kept as an independent
// route for cross-checking the primary definition.
Real omega_plus_alternate(const PrecisionContext& ctx);

}  // namespace dilog7
