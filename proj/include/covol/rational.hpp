#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace covol {

// Small exact rational, reduced with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_one() const { return num == 1 && den == 1; }
  bool is_positive() const { return num > 0; }

  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace covol
