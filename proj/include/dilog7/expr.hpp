#pragma once

#include <string>

#include "dilog7/context.hpp"
#include "dilog7/real.hpp"

namespace dilog7 {

/*
 * Evaluates a constant expression at the context's working precision.
 *
 * Grammar: decimal literals, + - * /, parentheses, unary minus, the
 * constants pi, sqrt7, phi7, theta_plus, omega_plus, and the functions
 * sqrt(x), cl2(x), L(d, s).  Throws ConfigError on parse errors and
 * propagates evaluation-domain errors.
 */
Real eval_expression(const std::string& text, const PrecisionContext& ctx);

}  // namespace dilog7
