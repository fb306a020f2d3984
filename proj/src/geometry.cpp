#include "covol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace covol {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog10Pi = std::log10(kPi);
constexpr double kLog10Two = std::numbers::ln2 / std::numbers::ln10;

void mul_u32(std::vector<std::uint32_t>& limbs, std::uint32_t f) {
  std::uint64_t carry = 0;
  for (auto& l : limbs) {
    const std::uint64_t v = static_cast<std::uint64_t>(l) * f + carry;
    l = static_cast<std::uint32_t>(v);
    carry = v >> 32;
  }
  if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
}

double log10_of_limbs(const std::vector<std::uint32_t>& limbs) {
  const std::size_t top = limbs.size() - 1;
  long double mant = limbs[top];
  int shift = 0;
  for (std::size_t i = 1; i <= 2 && i <= top; ++i) {
    mant = mant * 4294967296.0L + limbs[top - i];
    shift += 32;
  }
  const long double bits = 32.0L * static_cast<long double>(top) - shift;
  return static_cast<double>(std::log10(mant) + bits * std::log10(2.0L));
}

// Wallis values W_n = I_n(pi/2) via the ascending recurrence (all factors < 1).
double wallis(std::int64_t n) {
  double w = (n % 2 == 0) ? kPi / 2 : 1.0;
  for (std::int64_t k = 2 + (n % 2); k <= n; k += 2)
    w *= static_cast<double>(k - 1) / static_cast<double>(k);
  return w;
}

}  // namespace

LogReal LogReal::from_value(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("LogReal: non-finite value");
  LogReal r;
  if (v == 0.0) return r;
  r.sign_ = v < 0 ? -1 : +1;
  r.log10_mag_ = std::log10(std::fabs(v));
  return r;
}

LogReal LogReal::from_log10(double log10_mag, int sign) {
  if (sign != +1 && sign != -1) throw std::invalid_argument("LogReal: sign must be +1 or -1");
  if (!std::isfinite(log10_mag)) throw std::invalid_argument("LogReal: non-finite log magnitude");
  LogReal r;
  r.sign_ = sign;
  r.log10_mag_ = log10_mag;
  return r;
}

double LogReal::log10_mag() const {
  if (sign_ == 0) throw std::domain_error("LogReal: log10 of zero");
  return log10_mag_;
}

double LogReal::log10() const {
  if (sign_ <= 0) throw std::domain_error("LogReal: log10 requires a positive value");
  return log10_mag_;
}

double LogReal::value() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::pow(10.0, log10_mag_);
}

LogReal LogReal::operator*(const LogReal& o) const {
  LogReal r;
  if (sign_ == 0 || o.sign_ == 0) return r;
  r.sign_ = sign_ * o.sign_;
  r.log10_mag_ = log10_mag_ + o.log10_mag_;
  return r;
}

LogReal LogReal::operator/(const LogReal& o) const {
  if (o.sign_ == 0) throw std::domain_error("LogReal: division by zero");
  LogReal r;
  if (sign_ == 0) return r;
  r.sign_ = sign_ * o.sign_;
  r.log10_mag_ = log10_mag_ - o.log10_mag_;
  return r;
}

LogReal LogReal::reciprocal() const { return one() / *this; }

LogReal pow(const LogReal& b, double e) {
  if (b.sign_ < 0) throw std::domain_error("LogReal: pow of a negative base");
  if (b.sign_ == 0) {
    if (e > 0) return LogReal{};
    throw std::domain_error("LogReal: pow of zero to a non-positive exponent");
  }
  return LogReal::from_log10(b.log10_mag_ * e);
}

std::string LogReal::scientific(int significant_digits) const {
  if (sign_ == 0) return "0";
  const int prec = std::clamp(significant_digits, 1, 17) - 1;
  double e = std::floor(log10_mag_);
  double m = std::pow(10.0, log10_mag_ - e);
  char mbuf[64];
  std::snprintf(mbuf, sizeof mbuf, "%.*f", prec, m);
  if (mbuf[0] == '1' && mbuf[1] == '0') {  // mantissa rounded up to 10.000...
    e += 1;
    std::snprintf(mbuf, sizeof mbuf, "%.*f", prec, m / 10.0);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s%se%+03d", sign_ < 0 ? "-" : "", mbuf, static_cast<int>(e));
  return buf;
}

double log10_factorial(std::uint64_t n) {
  if (n < 2) return 0.0;
  if (n > 10000) return std::lgamma(static_cast<double>(n) + 1.0) / std::numbers::ln10;

  static std::map<std::uint64_t, double> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::uint32_t> limbs{1};
  for (std::uint32_t k = 2; k <= n; ++k) mul_u32(limbs, k);
  const double r = log10_of_limbs(limbs);
  {
    std::lock_guard lock(mutex);
    cache.emplace(n, r);
  }
  return r;
}

LogReal log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  const double r2 = std::round(2.0 * x);
  if (r2 == 2.0 * x && x < 2.0e7) {
    const auto twice = static_cast<std::uint64_t>(r2);
    if (twice % 2 == 0) {  // integer: Gamma(n) = (n-1)!
      return LogReal::from_log10(log10_factorial(twice / 2 - 1));
    }
    // half-integer m + 1/2: Gamma = (2m)! / (4^m m!) * sqrt(pi)
    const std::uint64_t m = twice / 2;
    const double l = log10_factorial(2 * m) - log10_factorial(m) -
                     static_cast<double>(m) * 2.0 * kLog10Two + 0.5 * kLog10Pi;
    return LogReal::from_log10(l);
  }
  return LogReal::from_log10(std::lgamma(x) / std::numbers::ln10);
}

namespace {

// I_n(x) = s^{n+1} * sum_{j>=0} c_j s^{2j} / (n+1+2j) with s = sin(x) and
// c_j = (2j-1)!!/(2j)!!; every term is positive, so the sum carries no
// cancellation for any n. Convergence rate is s^2 per term.
LogReal sin_integral_series(std::int64_t n, double s, long max_terms) {
  const double s2 = s * s;
  double coeff = 1.0;
  double spow = 1.0;
  double sum = 1.0 / static_cast<double>(n + 1);
  for (long j = 1; j <= max_terms; ++j) {
    coeff *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
    spow *= s2;
    const double term = coeff * spow / static_cast<double>(n + 1 + 2 * j);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return LogReal::from_log10(static_cast<double>(n + 1) * std::log10(s) + std::log10(sum));
}

// I_n(x) = W_n - J_n(x) with J_n = int_x^{pi/2} sin^n; the J recurrence
//   J_k = ((k-1) J_{k-2} + s^{k-1} c) / k
// has positive terms only. Valid whenever I_n is not a vanishing fraction of
// W_n, i.e. for x near pi/2 (n cos^2 x small).
LogReal sin_integral_complement(std::int64_t n, double x, double s, double c) {
  double w = (n % 2 == 0) ? kPi / 2 : 1.0;
  double j = (n % 2 == 0) ? kPi / 2 - x : c;
  double spow = (n % 2 == 0) ? s : s * s;
  const double s2 = s * s;
  for (std::int64_t k = 2 + (n % 2); k <= n; k += 2) {
    w *= static_cast<double>(k - 1) / static_cast<double>(k);
    j = (static_cast<double>(k - 1) * j + spow * c) / static_cast<double>(k);
    spow *= s2;
  }
  return LogReal::from_value(std::max(w - j, 0.0));
}

}  // namespace

LogReal log_sin_power_integral(std::int64_t n, double x) {
  if (n < 0) throw std::invalid_argument("sin_power_integral: negative exponent");
  if (n > 100000000) throw std::invalid_argument("sin_power_integral: exponent too large");
  if (!(x >= 0.0) || x > kPi * (1.0 + 1e-12))
    throw std::domain_error("sin_power_integral: x outside [0, pi]");
  x = std::min(x, kPi);

  if (x == 0.0) return LogReal{};
  if (x > kPi / 2) {
    // reflect: I_n(x) = 2 W_n - I_n(pi - x); the subtrahend never exceeds W_n
    const double rest = log_sin_power_integral(n, kPi - x).value();
    return LogReal::from_value(2.0 * wallis(n) - rest);
  }
  if (n == 0) return LogReal::from_value(x);

  const double s = std::sin(x);
  const double c = std::cos(x);
  const double ln_s2 = 2.0 * std::log(s);

  long series_terms = -1;  // -1: series unusable (x at pi/2)
  if (ln_s2 < -1e-18) {
    const double est = -45.0 / ln_s2 + 8.0;
    series_terms = est > 2e9 ? 2000000000L : static_cast<long>(est);
  }
  const bool complement_safe = static_cast<double>(n) * c * c <= 25.0;
  const long budget = std::max<long>(50000, 2 * static_cast<long>(n) + 16);

  if (series_terms >= 0 && (!complement_safe || series_terms <= std::max<long>(256, n / 4)))
    return sin_integral_series(n, s, std::min(series_terms + 8, budget));
  return sin_integral_complement(n, x, s, c);
}

double sin_power_integral(std::int64_t n, double x) {
  return log_sin_power_integral(n, x).value();
}

LogReal ball_volume_with_limit(std::int64_t d, double k, double limit) {
  if (d < 1) throw std::invalid_argument("ball_volume: dimension must be positive");
  if (!(k > 0.0)) throw std::invalid_argument("ball_volume: curvature bound must be positive");
  if (!(limit >= 0.0) || limit > kPi * (1.0 + 1e-12))
    throw std::domain_error("ball_volume: r sqrt(k) exceeds pi (model cut locus)");
  const LogReal integral = log_sin_power_integral(d - 1, std::min(limit, kPi));
  if (integral.is_zero()) return LogReal{};
  const double half_d = static_cast<double>(d) / 2.0;
  const double l = kLog10Two + half_d * (kLog10Pi - std::log10(k)) - log_gamma(half_d).log10() +
                   integral.log10();
  return LogReal::from_log10(l);
}

LogReal ball_volume(std::int64_t d, double k, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("ball_volume: radius must be nonnegative");
  if (!(k > 0.0)) throw std::invalid_argument("ball_volume: curvature bound must be positive");
  return ball_volume_with_limit(d, k, r * std::sqrt(k));
}

}  // namespace covol
