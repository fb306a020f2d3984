#pragma once

#include "covol/constants.hpp"

namespace covol {

// Maximum of the two-variable objective behind the sectional-curvature bound,
// together with where it is attained on the closed unit square.
struct PolyMax {
  double alpha = 0.0;
  double value = 0.0;
  double a = 0.0;
  double b = 0.0;
};

struct CurvatureBound {
  PolyMax poly;
  double k = 0.0;  // poly.value / 4 * C1^2
};

// P(alpha; a, b) = a^2 + b^2 + (alpha^2-2) a^2 b^2
//                + 6 (alpha+1) a b sqrt(1-a^2) sqrt(1-b^2)   on [0,1]^2.
double curvature_poly(double alpha, double a, double b);

// Global maximum of P over the closed unit square: 2001 x 2001 grid scan
// (over a <= b; P is symmetric), then damped Newton on the gradient when the
// best point is interior.
PolyMax max_curvature_poly(double alpha);

// Upper bound k on the sectional curvatures for the given constants:
// k = max P(C2/C1) / 4 * C1^2.
CurvatureBound sectional_bound(const ConstantsProfile& profile);

}  // namespace covol
