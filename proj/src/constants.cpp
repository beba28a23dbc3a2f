#include "dilog7/constants.hpp"

namespace dilog7 {

Constants constants(const PrecisionContext& ctx) {
  Real pi = ctx.pi();
  Real sqrt7 = sqrt(ctx.real(7));
  Real phi7 = atan(sqrt7);
  Real theta_plus = atan(sqrt7 / 3);
  Real omega_plus = phi7 - 2 * pi / 3;
  return Constants{std::move(pi), std::move(sqrt7), std::move(phi7),
                   std::move(theta_plus), std::move(omega_plus)};
}

Real omega_plus_alternate(const PrecisionContext& ctx) {
  Real sqrt3 = sqrt(ctx.real(3));
  Real sqrt7 = sqrt(ctx.real(7));
  return -atan((2 * sqrt3 + sqrt7) / 5);
}

}  // namespace dilog7
