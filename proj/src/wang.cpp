#include "covol/wang.hpp"

#include <cmath>
#include <stdexcept>

namespace covol {

double wang_f(double c1, double c2, double t) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::invalid_argument("wang_f: constants must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("wang_f: t must be nonnegative");
  const double x = c1 * t;
  // x/(e^x - 1) has a removable singularity at 0; series below 1e-6 keeps
  // relative error under 1e-24.
  const double third = x < 1e-6 ? 1.0 - x / 2.0 + x * x / 12.0 : x / std::expm1(x);
  return std::expm1(x) + 2.0 * std::sin(c2 * t) - third;
}

WangRadius solve_wang_radius(double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0))
    throw std::invalid_argument("solve_wang_radius: constants must be positive");

  // F(0) = -1; scan until the first sign change, then bisect. F varies on the
  // scale 1/c1 and its first zero sits near 0.2/c1, so the 1e-3/c1 step
  // brackets it with a wide margin.
  const double step = 1e-3 / c1;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (long i = 1; i <= 20000; ++i) {
    const double t = static_cast<double>(i) * step;
    if (wang_f(c1, c2, t) >= 0.0) {
      lo = static_cast<double>(i - 1) * step;
      hi = t;
      bracketed = true;
      break;
    }
  }
  if (!bracketed)
    throw std::runtime_error("solve_wang_radius: no zero of F in (0, 20/C1]");

  for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution reached
    (wang_f(c1, c2, mid) < 0.0 ? lo : hi) = mid;
  }

  WangRadius result;
  result.r_g = 0.5 * (lo + hi);
  result.r_half = result.r_g / 2.0;
  result.residual = std::fabs(wang_f(c1, c2, result.r_g));
  return result;
}

}  // namespace covol
