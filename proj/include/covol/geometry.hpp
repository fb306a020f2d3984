#pragma once

#include <cstdint>
#include <string>

namespace covol {

// Sign-and-magnitude representation sign * 10^log10_mag. The bound pipeline
// produces values far outside double range (down to ~1e-2300 for large table
// entries), so every product in it is assembled in log space.
class LogReal {
 public:
  LogReal() = default;  // zero

  static LogReal from_value(double v);
  static LogReal from_log10(double log10_mag, int sign = +1);
  static LogReal one() { return from_log10(0.0); }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  // log10 of |value|; only defined for nonzero values.
  double log10_mag() const;
  // log10 of the value itself; requires a positive value.
  double log10() const;
  // Plain double conversion; underflows to 0 / overflows to inf outside range.
  double value() const;

  LogReal operator*(const LogReal& o) const;
  LogReal operator/(const LogReal& o) const;
  LogReal reciprocal() const;

  // b^e for b >= 0 (e > 0 required when b == 0).
  friend LogReal pow(const LogReal& b, double e);

  // "5.94845e-13" style with the given number of significant digits (1..17).
  std::string scientific(int significant_digits = 6) const;

 private:
  int sign_ = 0;
  double log10_mag_ = 0.0;
};

// log10(n!). Exact big-integer product up to n = 10000 (the only rounding is
// the final conversion of the integer to a double-precision log), lgamma
// above that.
double log10_factorial(std::uint64_t n);

// Gamma(x), x > 0, as a LogReal. Integers use the exact factorial route,
// half-integers the exact Gamma(1/2) = sqrt(pi) recurrence, anything else
// lgamma.
LogReal log_gamma(double x);

// I_n(x) = integral of sin^n(phi) over [0, x], for 0 <= x <= pi.
LogReal log_sin_power_integral(std::int64_t n, double x);

// Same value as a plain double; underflows to 0 when the integral is below
// double range (large n, small x).
double sin_power_integral(std::int64_t n, double x);

// Volume of a ball of radius r in the complete simply connected d-dimensional
// model of constant curvature k > 0:
//   V(d,k,r) = 2 (pi/k)^{d/2} / Gamma(d/2) * I_{d-1}(r sqrt(k)).
// Requires r sqrt(k) <= pi (the model cut locus). This is the comparison
// lower bound for balls in manifolds with sectional curvature <= k.
LogReal ball_volume(std::int64_t d, double k, double r);

// V with the integration limit supplied directly instead of r*sqrt(k); the
// bound assembly pins rounded limits independently of r and k.
LogReal ball_volume_with_limit(std::int64_t d, double k, double limit);

}  // namespace covol
