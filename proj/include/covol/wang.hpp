#pragma once

namespace covol {

// Least positive zero R of F(t) = e^{C1 t} - 1 + 2 sin(C2 t) - C1 t/(e^{C1 t} - 1),
// the radius of the displacement ball that a conjugate of every discrete
// subgroup misses, together with the embedded-ball radius R/2.
struct WangRadius {
  double r_g = 0.0;      // least positive zero of F
  double r_half = 0.0;   // r_g / 2
  double residual = 0.0; // |F(r_g)| at the returned point
};

// F itself; t >= 0. F(0) = -1 (the removable singularity of the third term
// is evaluated by series).
double wang_f(double c1, double c2, double t);

WangRadius solve_wang_radius(double c1, double c2);

}  // namespace covol
