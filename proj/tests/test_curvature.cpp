#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "covol/curvature.hpp"

using namespace covol;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kArgmax1 = std::sqrt(7.0 / 13.0);
}  // namespace

TEST_CASE("curvature polynomial point values") {
  CHECK(curvature_poly(1.0, kArgmax1, kArgmax1) == doctest::Approx(49.0 / 13.0).epsilon(1e-14));
  CHECK(curvature_poly(1.3, 0.47, 0.0) == doctest::Approx(0.47 * 0.47).epsilon(1e-15));
  CHECK(curvature_poly(kSqrt2, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS(curvature_poly(1.0, -0.1, 0.5));
  CHECK_THROWS(curvature_poly(1.0, 0.5, 1.1));
  CHECK_THROWS(curvature_poly(0.0, 0.5, 0.5));
}

TEST_CASE("curvature polynomial symmetry in (a, b)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> al(0.5, 3.0);
  for (int i = 0; i < 100000; ++i) {
    const double alpha = al(rng);
    const double a = unit(rng);
    const double b = unit(rng);
    const double pab = curvature_poly(alpha, a, b);
    const double pba = curvature_poly(alpha, b, a);
    CHECK(std::fabs(pab - pba) <= 1e-14 * std::max(1.0, std::fabs(pab)));
  }
}

TEST_CASE("maximum at alpha = 1") {
  const PolyMax m = max_curvature_poly(1.0);
  CHECK(std::fabs(m.value - 49.0 / 13.0) < 1e-9);
  CHECK(std::fabs(m.a - kArgmax1) < 1e-6);
  CHECK(std::fabs(m.b - kArgmax1) < 1e-6);

  // brute force along the diagonal (the argmax is on it by symmetry)
  double brute = 0.0;
  const int samples = 10000000;
  for (int i = 0; i <= samples; ++i) {
    const double a = static_cast<double>(i) / samples;
    brute = std::max(brute, curvature_poly(1.0, a, a));
  }
  CHECK(std::fabs(brute - 49.0 / 13.0) < 1e-10);
  CHECK(brute <= m.value + 1e-12);
}

TEST_CASE("maximum at alpha = sqrt(2)") {
  const PolyMax m = max_curvature_poly(kSqrt2);
  CHECK(std::fabs(m.value - 4.69036) <= 1e-5);
  CHECK(std::fabs(m.value - 4.690355937288492) < 1e-11);
  CHECK(std::fabs(m.a - 0.754344479484572) < 1e-6);
}

TEST_CASE("interior argmax beats the boundary") {
  for (const double alpha : {1.0, kSqrt2}) {
    const PolyMax m = max_curvature_poly(alpha);
    CHECK(m.a > 0.5);
    CHECK(m.b < 0.9);
    double edge = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double t = i / 2000.0;
      edge = std::max({edge, curvature_poly(alpha, 0.0, t), curvature_poly(alpha, 1.0, t),
                       curvature_poly(alpha, t, 0.0), curvature_poly(alpha, t, 1.0)});
    }
    CHECK(edge == doctest::Approx(2.0).epsilon(1e-12));  // cross term dies on the edges
    CHECK(m.value > edge);
  }
}

TEST_CASE("newton refinement only improves on the grid") {
  for (const double alpha : {1.0, kSqrt2, 1.7}) {
    constexpr int grid = 2000;
    double coarse = 0.0;
    for (int i = 0; i <= grid; ++i)
      for (int j = i; j <= grid; ++j)
        coarse = std::max(coarse,
                          curvature_poly(alpha, static_cast<double>(i) / grid,
                                         static_cast<double>(j) / grid));
    const double refined = max_curvature_poly(alpha).value;
    CHECK(refined >= coarse - 1e-12);
    CHECK(refined - coarse < 1e-6);
  }
}

TEST_CASE("maximum nondecreasing in alpha") {
  double prev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double alpha = 1.0 + i * 0.05;
    const double v = max_curvature_poly(alpha).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("sectional bounds per constants class") {
  const ConstantsProfile equal{kSqrt2, kSqrt2, 1.0};
  CHECK(sectional_bound(equal).k == doctest::Approx(49.0 / 26.0).epsilon(1e-9));

  const ConstantsProfile one{1.0, kSqrt2, kSqrt2};
  const double k1 = sectional_bound(one).k;
  CHECK(std::fabs(k1 - 1.17259) <= 3e-6);
  CHECK(k1 == doctest::Approx(1.17258898432212).epsilon(1e-10));

  const ConstantsProfile h3{1.0, 1.0, 1.0};
  CHECK(sectional_bound(h3).k == doctest::Approx(49.0 / 52.0).epsilon(1e-9));
}
