#pragma once

#include <stdexcept>
#include <string>

#include "dilog7/real.hpp"

namespace dilog7 {

// Invalid configuration (bad digit count, bad flag combination).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's mathematical domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative evaluation failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Working-precision policy for a whole computation.
 *
 * Results are reported at `digits` decimal digits and computed internally
 * at digits + guard decimal digits; the guard band absorbs rounding and
 * truncation noise so that module-level error bounds stay below
 * tolerance() = 10^-digits.
 */
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 16;
  static constexpr int kGuardDigits = 15;

  int digits() const { return digits_; }
  int guard() const { return kGuardDigits; }
  Prec work_bits() const { return bits_; }

  Real tolerance() const { return Real::pow10(-digits_, bits_); }
  // Target for module-internal truncation, a few digits inside the guard
  // band: leaves room for downstream aggregation before tolerance().
  Real internal_tolerance() const {
    return Real::pow10(-(digits_ + kGuardDigits - 3), bits_);
  }
  // Floor of representable noise at working precision.
  Real work_eps() const { return Real::pow10(-(digits_ + kGuardDigits), bits_); }

  Real real(long n) const { return Real::of(n, bits_); }
  Real real(int n) const { return Real::of(static_cast<long>(n), bits_); }
  Real real(double x) const { return Real::of(x, bits_); }
  Real parse(const std::string& s) const { return Real::parse(s, bits_); }
  Real pi() const { return Real::pi(bits_); }

 private:
  friend PrecisionContext make_context(int digits);
  explicit PrecisionContext(int digits);

  int digits_;
  Prec bits_;
};

// Rejects digits below kMinDigits with a ConfigError.
PrecisionContext make_context(int digits);

}  // namespace dilog7
