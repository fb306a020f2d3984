// Test-only reference implementations, independent of the library's
// production paths.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "covol/geometry.hpp"

namespace covol::testing {

inline double simpson_rule(double h, double fa, double fm, double fb) {
  return (fa + 4.0 * fm + fb) * h / 6.0;
}

inline double simpson_recurse(const std::function<double(double)>& f, double a, double m, double b,
                              double fa, double fm, double fb, double whole, double rel_tol,
                              int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_rule(m - a, fa, flm, fm);
  const double right = simpson_rule(b - m, fm, frm, fb);
  const double err = (left + right - whole) / 15.0;
  if (depth <= 0 || std::fabs(err) <= rel_tol * std::fabs(left + right) + 1e-320)
    return left + right + err;
  return simpson_recurse(f, a, lm, m, fa, flm, fm, left, rel_tol, depth - 1) +
         simpson_recurse(f, m, rm, b, fm, frm, fb, right, rel_tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double rel_tol = 1e-15, int depth = 60) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  return simpson_recurse(f, a, m, b, fa, fm, fb, simpson_rule(b - a, fa, fm, fb), rel_tol, depth);
}

// Quadrature reference for I_n(x) when the value is representable in double.
inline double sin_power_quad(long long n, double x) {
  return adaptive_simpson(
      [n](double p) { return std::pow(std::sin(p), static_cast<double>(n)); }, 0.0, x);
}

// Reference for very large n on (0, pi/2]: the peak value sin(x)^n is factored
// out so the remaining integrand lies in [0, 1].
inline covol::LogReal log_sin_power_quad(long long n, double x) {
  const double ls = std::log(std::sin(x));
  const double scaled = adaptive_simpson(
      [n, ls](double p) { return std::exp(static_cast<double>(n) * (std::log(std::sin(p)) - ls)); },
      0.0, x, 1e-14);
  return covol::LogReal::from_log10(
      (static_cast<double>(n) * ls + std::log(scaled)) / std::numbers::ln10);
}

}  // namespace covol::testing
