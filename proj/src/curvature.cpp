#include "covol/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace covol {

namespace {

struct Gradient {
  double ga, gb;
  double haa, hbb, hab;
};

// Valid only in the open square; the square roots in P make the gradient
// singular on the a = 1 / b = 1 edges.
Gradient poly_gradient(double alpha, double a, double b) {
  const double u = std::sqrt(1.0 - a * a);
  const double v = std::sqrt(1.0 - b * b);
  const double s = 6.0 * (alpha + 1.0);
  const double c = alpha * alpha - 2.0;
  Gradient g;
  g.ga = 2.0 * a + 2.0 * c * a * b * b + s * b * v * (1.0 - 2.0 * a * a) / u;
  g.gb = 2.0 * b + 2.0 * c * b * a * a + s * a * u * (1.0 - 2.0 * b * b) / v;
  g.haa = 2.0 + 2.0 * c * b * b + s * b * v * a * (2.0 * a * a - 3.0) / (u * u * u);
  g.hbb = 2.0 + 2.0 * c * a * a + s * a * u * b * (2.0 * b * b - 3.0) / (v * v * v);
  g.hab = 4.0 * c * a * b + s * (1.0 - 2.0 * a * a) * (1.0 - 2.0 * b * b) / (u * v);
  return g;
}

}  // namespace

double curvature_poly(double alpha, double a, double b) {
  if (!(alpha > 0.0)) throw std::invalid_argument("curvature_poly: alpha must be positive");
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw std::invalid_argument("curvature_poly: (a, b) outside the unit square");
  return a * a + b * b + (alpha * alpha - 2.0) * a * a * b * b +
         6.0 * (alpha + 1.0) * a * b * std::sqrt(1.0 - a * a) * std::sqrt(1.0 - b * b);
}

PolyMax max_curvature_poly(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("max_curvature_poly: alpha must be positive");

  constexpr int kGrid = 2000;  // 2001 points per axis
  PolyMax best{alpha, -1.0, 0.0, 0.0};
  for (int i = 0; i <= kGrid; ++i) {
    const double a = static_cast<double>(i) / kGrid;
    for (int j = i; j <= kGrid; ++j) {  // a <= b: P is symmetric
      const double b = static_cast<double>(j) / kGrid;
      const double v = curvature_poly(alpha, a, b);
      if (v > best.value) {
        best.value = v;
        best.a = a;
        best.b = b;
      }
    }
  }

  // Newton refinement from the best grid point, if interior. Steps are damped
  // to stay inside the square and never decrease P.
  const double margin = 1.0 / kGrid;
  if (best.a > margin / 2 && best.b > margin / 2 && best.a < 1.0 - margin / 2 &&
      best.b < 1.0 - margin / 2) {
    double a = best.a, b = best.b, val = best.value;
    for (int iter = 0; iter < 100; ++iter) {
      const Gradient g = poly_gradient(alpha, a, b);
      if (std::max(std::fabs(g.ga), std::fabs(g.gb)) <= 1e-13) break;
      const double det = g.haa * g.hbb - g.hab * g.hab;
      if (!(std::fabs(det) > 1e-30)) break;
      const double da = -(g.hbb * g.ga - g.hab * g.gb) / det;
      const double db = -(g.haa * g.gb - g.hab * g.ga) / det;
      double lambda = 1.0;
      bool moved = false;
      for (int h = 0; h < 50; ++h, lambda *= 0.5) {
        const double na = a + lambda * da;
        const double nb = b + lambda * db;
        if (na <= 1e-9 || nb <= 1e-9 || na >= 1.0 - 1e-9 || nb >= 1.0 - 1e-9) continue;
        const double nv = curvature_poly(alpha, na, nb);
        if (nv >= val - 1e-15) {
          a = na;
          b = nb;
          val = nv;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (val >= best.value) {
      best.a = std::min(a, b);
      best.b = std::max(a, b);
      best.value = val;
    }
  }
  return best;
}

CurvatureBound sectional_bound(const ConstantsProfile& profile) {
  if (!(profile.c1 > 0.0 && profile.c2 > 0.0))
    throw std::invalid_argument("sectional_bound: constants must be positive");
  const double alpha = profile.c2 / profile.c1;

  static std::map<double, PolyMax> cache;
  static std::mutex mutex;
  PolyMax pm;
  bool found = false;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(alpha); it != cache.end()) {
      pm = it->second;
      found = true;
    }
  }
  if (!found) {
    pm = max_curvature_poly(alpha);
    std::lock_guard lock(mutex);
    cache.emplace(alpha, pm);
  }
  return CurvatureBound{pm, pm.value / 4.0 * profile.c1 * profile.c1};
}

}  // namespace covol
