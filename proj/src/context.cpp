#include "dilog7/context.hpp"

#include <cmath>

namespace dilog7 {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  // log2(10) per decimal digit, plus slack bits for intermediate rounding.
  const double kBitsPerDigit = 3.3219280948873623;
  bits_ = static_cast<Prec>(std::ceil((digits_ + kGuardDigits) * kBitsPerDigit)) + 16;
}

PrecisionContext make_context(int digits) {
  if (digits < PrecisionContext::kMinDigits) {
    throw ConfigError("precision context requires at least " +
                      std::to_string(PrecisionContext::kMinDigits) +
                      " digits, got " + std::to_string(digits));
  }
  return PrecisionContext(digits);
}

}  // namespace dilog7
