#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "covol/geometry.hpp"
#include "oracles.hpp"

using namespace covol;
namespace oracle = covol::testing;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("LogReal round trip and products") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> logdist(-300.0, 300.0);
  std::uniform_real_distribution<double> mant(1.0, 10.0);

  for (int i = 0; i < 1000; ++i) {
    const double la = logdist(rng);
    const double lb = logdist(rng);
    const LogReal a = LogReal::from_log10(la);
    const LogReal b = LogReal::from_log10(lb);
    CHECK((a * b).log10_mag() == doctest::Approx(la + lb).epsilon(1e-14));
    CHECK((a / b).log10_mag() == doctest::Approx(la - lb).epsilon(1e-14));
  }

  // against direct multiplication where both factors and the product are
  // comfortably in range
  std::uniform_real_distribution<double> narrow(-120.0, 120.0);
  for (int i = 0; i < 1000; ++i) {
    const double va = mant(rng) * std::pow(10.0, std::floor(narrow(rng)));
    const double vb = mant(rng) * std::pow(10.0, std::floor(narrow(rng)));
    const LogReal p = LogReal::from_value(va) * LogReal::from_value(vb);
    CHECK(rel_diff(p.value(), va * vb) < 1e-12);
  }

  for (const double l : {-299.0, -120.5, -3.25, 0.0, 7.75, 250.0}) {
    CHECK(LogReal::from_value(std::pow(10.0, l)).log10_mag() == doctest::Approx(l).epsilon(1e-13));
    CHECK(rel_diff(LogReal::from_log10(l).value(), std::pow(10.0, l)) < 1e-12);
  }
}

TEST_CASE("LogReal signs, zero and errors") {
  const LogReal zero = LogReal::from_value(0.0);
  CHECK(zero.is_zero());
  CHECK(zero.value() == 0.0);
  CHECK((zero * LogReal::from_value(3.0)).is_zero());
  CHECK_THROWS(zero.log10_mag());
  CHECK_THROWS(LogReal::from_value(1.0) / zero);

  const LogReal neg = LogReal::from_value(-2500.0);
  CHECK(neg.sign() == -1);
  CHECK(neg.value() == doctest::Approx(-2500.0).epsilon(1e-13));
  CHECK((neg * neg).sign() == +1);
  CHECK_THROWS(neg.log10());
  CHECK_THROWS(pow(neg, 2.0));
  CHECK(pow(LogReal::from_value(4.0), 0.5).value() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("LogReal scientific formatting") {
  CHECK(LogReal::from_value(5.94845e-13).scientific(6) == "5.94845e-13");
  CHECK(LogReal::from_value(4.015e-84).scientific(4) == "4.015e-84");
  CHECK(LogReal::from_value(-2500.0).scientific(6) == "-2.50000e+03");
  CHECK(LogReal::from_value(0.0).scientific(6) == "0");
  // mantissa that rounds up to the next decade
  CHECK(LogReal::from_value(9.99999e-5).scientific(3) == "1.00e-04");

  // round trip through the printed form stays within 1e-5 in log10
  for (const double l : {-75.459777, -12.2255964, 3.9084, 0.0, 299.1}) {
    const LogReal v = LogReal::from_log10(l);
    const double back = std::log10(std::strtod(v.scientific(6).c_str(), nullptr));
    CHECK(std::fabs(back - l) < 1e-5);
  }
}

TEST_CASE("log_gamma: integers, half-integers, general") {
  // Gamma(26) = 25!
  CHECK(std::fabs(log_gamma(26.0).log10() - 25.190645678835077) < 1e-10);
  CHECK(log_gamma(26.0).log10() == doctest::Approx(log10_factorial(25)).epsilon(1e-15));

  // Gamma(1/2) = sqrt(pi)
  CHECK(std::fabs(log_gamma(0.5).log10() - 0.5 * std::log10(kPi)) < 1e-15);

  // Gamma(7/2) by the recurrence from Gamma(1/2)
  const double expected = (5.0 / 2.0) * (3.0 / 2.0) * (1.0 / 2.0) * std::sqrt(kPi);
  CHECK(rel_diff(log_gamma(3.5).value(), expected) < 1e-13);
  CHECK(rel_diff(log_gamma(3.5).value(), 3.3233509704478426) < 1e-13);

  // general (lgamma) branch
  CHECK(rel_diff(log_gamma(5.25).value(), 35.211611852799686) < 1e-12);

  // large integer through the exact product
  CHECK(std::fabs(log_gamma(1300.0).log10() - 3482.3856776220754) < 1e-8);

  // half-integer vs lgamma cross-route
  CHECK(std::fabs(log_gamma(637.5).log10() - std::lgamma(637.5) / std::numbers::ln10) < 1e-10);

  CHECK_THROWS(log_gamma(0.0));
  CHECK_THROWS(log_gamma(-3.0));
}

TEST_CASE("sin power integral: fixed values") {
  CHECK(sin_power_integral(0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sin_power_integral(1, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sin_power_integral(7, kPi / 2) == doctest::Approx(16.0 / 35.0).epsilon(1e-14));
  CHECK(sin_power_integral(5, 0.0) == 0.0);

  // values feeding the published bounds
  CHECK(rel_diff(sin_power_integral(51, 0.12344), 9.67200488361642405e-50) < 1e-12);
  CHECK(rel_diff(sin_power_integral(13, 0.134), 4.15481035832010798e-14) < 1e-12);
  CHECK(rel_diff(sin_power_integral(51, 0.134), 6.7543898915327467e-48) < 1e-12);
  CHECK(rel_diff(sin_power_integral(9, 0.12344), 8.05908741855698232e-11) < 1e-12);
  CHECK(rel_diff(sin_power_integral(7, 0.13445), 1.31240563702575388e-8) < 1e-12);

  CHECK(rel_diff(sin_power_integral(20, 0.5), 1.0572040221251392e-8) < 1e-12);
  CHECK(rel_diff(sin_power_integral(60, 1.0), 7.8348116192457080e-7) < 1e-12);

  // beyond pi/2 (reflection) and the full interval
  CHECK(rel_diff(sin_power_integral(35, 2.8), 0.42068229082552142) < 1e-12);
  CHECK(rel_diff(sin_power_integral(6, 3.1), 0.98174770421608948) < 1e-12);
  CHECK(sin_power_integral(3, kPi) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));

  CHECK_THROWS(sin_power_integral(-1, 0.5));
  CHECK_THROWS(sin_power_integral(3, -0.1));
  CHECK_THROWS(sin_power_integral(3, kPi + 0.1));
}

TEST_CASE("sin power integral vs quadrature across n and x") {
  for (const double x : {0.01, 0.1, 0.5, 1.0, kPi / 2}) {
    for (long long n = 1; n <= 60; ++n) {
      const double mine = sin_power_integral(n, x);
      const double ref = oracle::sin_power_quad(n, x);
      CHECK(std::fabs(mine - ref) / ref < 1e-10);
    }
  }
}

TEST_CASE("sin power integral in log space for extreme arguments") {
  // below double range; reference values from the exact hypergeometric series
  CHECK(std::fabs(log_sin_power_integral(60, 0.01).log10() - (-123.785750343519449)) < 1e-9);
  CHECK(std::fabs(log_sin_power_integral(2599, 0.134).log10() - (-2276.31983110528818)) < 1e-7);

  // scaled-quadrature cross-check for large n
  for (const auto& [n, x] : {std::pair<long long, double>{2599, 0.134}, {5000, 0.7}, {801, 1.4}}) {
    const double mine = log_sin_power_integral(n, x).log10();
    const double ref = oracle::log_sin_power_quad(n, x).log10();
    CHECK(std::fabs(mine - ref) < 1e-9);
  }

  CHECK(log_sin_power_integral(10, 0.0).is_zero());
}

TEST_CASE("ball volume: closed forms and limits") {
  // unit hemisphere of S^3: V(3, 1, pi/2) = pi^2
  CHECK(rel_diff(ball_volume(3, 1.0, kPi / 2).value(), kPi * kPi) < 1e-12);

  // Euclidean limit
  CHECK(rel_diff(ball_volume(2, 1e-12, 1.0).value(), kPi) < 1e-6);
  for (const long long d : {2LL, 3LL, 5LL, 10LL}) {
    const double r = 0.8;
    const double euclidean =
        std::pow(kPi, d / 2.0) / std::exp(std::lgamma(d / 2.0 + 1.0)) * std::pow(r, d);
    CHECK(rel_diff(ball_volume(d, 1e-10, r).value(), euclidean) < 1e-6);
  }

  // factor feeding the octonionic bound
  CHECK(std::fabs(ball_volume_with_limit(52, 1.17259, 0.12344).log10() -
                  (-62.776003325749268)) < 1e-9);

  CHECK_THROWS(ball_volume(3, 1.0, kPi + 0.01));
  CHECK_THROWS(ball_volume(0, 1.0, 0.5));
  CHECK_THROWS(ball_volume(3, -1.0, 0.5));
}

TEST_CASE("ball volume: monotone in k and r") {
  double prev = ball_volume(7, 0.25, 0.6).log10();
  for (const double k : {0.5, 1.0, 1.5, 2.0, 4.0}) {
    const double cur = ball_volume(7, k, 0.6).log10();
    CHECK(cur < prev);
    prev = cur;
  }
  prev = ball_volume(7, 1.3, 0.1).log10();
  for (const double r : {0.2, 0.4, 0.8, 1.6}) {
    const double cur = ball_volume(7, 1.3, r).log10();
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("log-space pipeline agrees with direct arithmetic in range") {
  for (const auto& [d, k, r] : {std::tuple<long long, double, double>{5, 1.2, 0.5},
                                {2, 0.7, 1.1},
                                {10, 1.88462, 0.134},
                                {26, 1.17259, 0.3},
                                {52, 1.17259, 0.12344 / std::sqrt(1.17259)}}) {
    const double direct = 2.0 * std::pow(kPi / k, d / 2.0) /
                          std::exp(std::lgamma(d / 2.0)) *
                          oracle::sin_power_quad(d - 1, r * std::sqrt(k));
    CHECK(rel_diff(ball_volume(d, k, r).value(), direct) < 1e-9);
  }
}
