#include "covol/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covol {

namespace {

const double kLog10Pi = std::log10(std::numbers::pi);
constexpr double kLog10Two = std::numbers::ln2 / std::numbers::ln10;

// v = outer^2 * radicand with radicand square-free.
void split_square(long long v, long long& outer, long long& radicand) {
  outer = 1;
  radicand = 1;
  for (long long p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (; e >= 2; e -= 2) outer *= p;
    if (e == 1) radicand *= p;
  }
  radicand *= v;
}

ExactVolumeExpression so_volume(int m) {
  // Vol(SO(2p))   = 2^{p-1} (2 pi)^{p^2}   / ((2p-2)! (2p-4)! ... 2!)
  // Vol(SO(2p+1)) = 2^{p}   (2 pi)^{p^2+p} / ((2p-1)! (2p-3)! ... 3! 1!)
  ExactVolumeExpression e;
  if (m == 2) {
    e.pow2 = 1;
    e.pow_pi = Rational(1);
    return e;
  }
  if (m % 2 == 0) {
    const long long p = m / 2;
    e.pow2 = (p - 1) + p * p;
    e.pow_pi = Rational(p * p);
    for (long long f = 2 * p - 2; f >= 2; f -= 2) e.factorial_denominators.push_back(f);
  } else {
    const long long p = (m - 1) / 2;
    e.pow2 = p + p * p + p;
    e.pow_pi = Rational(p * p + p);
    for (long long f = 2 * p - 1; f >= 3; f -= 2) e.factorial_denominators.push_back(f);
  }
  return e;
}

ExactVolumeExpression su_isotropy_volume(int n) {
  // Vol(S(U(n)U(1))) = sqrt(n+1) (2 pi)^{(n^2+n)/2} / ((n-1)! ... 2!)
  ExactVolumeExpression e;
  const long long half = (static_cast<long long>(n) * n + n) / 2;
  e.pow2 = half;
  e.pow_pi = Rational(half);
  long long outer = 1;
  split_square(n + 1, outer, e.sqrt_int);
  e.rational_scalar = Rational(outer);
  for (long long f = n - 1; f >= 2; --f) e.factorial_denominators.push_back(f);
  return e;
}

SymmetricSpaceSpec make_aux(std::string id, CartanLabel label, long long N, long long d,
                            long long alpha, ConstantsClass cls) {
  SymmetricSpaceSpec s;
  s.id = std::move(id);
  s.cartan_label = label;
  s.N = N;
  s.d = d;
  s.alpha_G = alpha;
  s.constants_class = cls;
  return s;
}

SymmetricSpaceSpec aii_space(int n) {
  // SU*(2n)/Sp(n): dim G = 4n^2 - 1, dim K = n(2n+1), alpha = 4n.
  if (n < 2 || n > 500) throw std::invalid_argument("AII family requires 2 <= n <= 500");
  const long long ln = n;
  auto s = make_aux("AII." + std::to_string(n), CartanLabel::AII, 2 * ln * ln - ln - 1,
                    4 * ln * ln - 1, 4 * ln, ConstantsClass::OneSqrt2);
  s.family_n = n;
  return s;
}

std::optional<int> parse_family_n(std::string_view id, std::string_view prefix) {
  if (id.size() <= prefix.size() || id.substr(0, prefix.size()) != prefix) return std::nullopt;
  int n = 0;
  const char* first = id.data() + prefix.size();
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return n;
}

std::string family_key(const SymmetricSpaceSpec& s) {
  if (s.family_n > 0) {
    const auto dot = s.id.find('.');
    return s.id.substr(0, dot);
  }
  return s.id;
}

}  // namespace

LogReal ExactVolumeExpression::evaluate() const {
  if (!rational_scalar.is_positive())
    throw std::invalid_argument("ExactVolumeExpression: scalar must be positive");
  if (sqrt_int < 1) throw std::invalid_argument("ExactVolumeExpression: radicand must be positive");
  double l = std::log10(static_cast<double>(rational_scalar.num)) -
             std::log10(static_cast<double>(rational_scalar.den));
  l += static_cast<double>(pow2) * kLog10Two;
  l += pow_pi.to_double() * kLog10Pi;
  l += 0.5 * std::log10(static_cast<double>(sqrt_int));
  for (const unsigned f : factorial_denominators) l -= log10_factorial(f);
  return LogReal::from_log10(l);
}

namespace catalog {

SymmetricSpaceSpec hyperbolic_space(int n) {
  if (n < 2 || n > 500) throw std::invalid_argument("H family requires 2 <= n <= 500");
  SymmetricSpaceSpec s;
  s.id = "H." + std::to_string(n);
  s.cartan_label = CartanLabel::BI;
  s.family_n = n;
  s.N = n;
  s.d = static_cast<long long>(n) * (n + 1) / 2;
  s.alpha_G = 2LL * n - 2;
  // n = 3 is the (1,1) exception; n = 2 sits among the normal real forms.
  s.constants_class = n == 3   ? ConstantsClass::H3Special
                      : n == 2 ? ConstantsClass::EqualSqrt2
                               : ConstantsClass::OneSqrt2;
  s.k_volume = so_volume(n);
  s.bound_supported = n >= 4;
  return s;
}

SymmetricSpaceSpec complex_hyperbolic_space(int n) {
  if (n < 2 || n > 500) throw std::invalid_argument("CH family requires 2 <= n <= 500");
  SymmetricSpaceSpec s;
  s.id = "CH." + std::to_string(n);
  s.cartan_label = CartanLabel::AIII;
  s.family_n = n;
  s.N = 2LL * n;
  s.d = static_cast<long long>(n) * n + 2LL * n;
  s.alpha_G = 2LL * n + 2;
  s.constants_class = ConstantsClass::EqualSqrt2;
  s.k_volume = su_isotropy_volume(n);
  s.bound_supported = true;
  return s;
}

SymmetricSpaceSpec octonionic_hyperbolic_plane() {
  SymmetricSpaceSpec s;
  s.id = "OH.2";
  s.cartan_label = CartanLabel::FII;
  s.N = 16;
  s.d = 52;
  s.alpha_G = 18;
  s.constants_class = ConstantsClass::OneSqrt2;
  // Spin(9), the double cover of SO(9): 2^5 (2 pi)^20 / (7! 5! 3!)
  ExactVolumeExpression e;
  e.pow2 = 25;
  e.pow_pi = Rational(20);
  e.factorial_denominators = {7, 5, 3};
  s.k_volume = e;
  s.bound_supported = true;
  return s;
}

SymmetricSpaceSpec g2_split_quotient() {
  SymmetricSpaceSpec s;
  s.id = "G2_2";
  s.cartan_label = CartanLabel::G;
  s.N = 8;
  s.d = 14;
  s.alpha_G = 8;
  s.constants_class = ConstantsClass::EqualSqrt2;
  // SO(4) embedded here: 48 sqrt(3) pi^4
  ExactVolumeExpression e;
  e.pow2 = 4;
  e.pow_pi = Rational(4);
  e.sqrt_int = 3;
  e.rational_scalar = Rational(3);
  s.k_volume = e;
  s.bound_supported = true;
  return s;
}

SymmetricSpaceSpec f4_split_quotient() {
  SymmetricSpaceSpec s;
  s.id = "F4_4";
  s.cartan_label = CartanLabel::FI;
  s.N = 28;
  s.d = 52;
  s.alpha_G = 18;
  s.constants_class = ConstantsClass::EqualSqrt2;
  // Sp(3)Sp(1): 2^21 pi^14 / (5! 3!)
  ExactVolumeExpression e;
  e.pow2 = 21;
  e.pow_pi = Rational(14);
  e.factorial_denominators = {5, 3};
  s.k_volume = e;
  s.bound_supported = true;
  return s;
}

std::vector<SymmetricSpaceSpec> list_spaces(int max_n) {
  if (max_n < 2) throw std::invalid_argument("list_spaces: max_n must be at least 2");
  std::vector<SymmetricSpaceSpec> out;
  for (int n = 2; n <= max_n; ++n) out.push_back(complex_hyperbolic_space(n));
  out.push_back(f4_split_quotient());
  out.push_back(g2_split_quotient());
  for (int n = 4; n <= max_n; ++n) out.push_back(hyperbolic_space(n));
  out.push_back(octonionic_hyperbolic_plane());
  std::sort(out.begin(), out.end(), [](const SymmetricSpaceSpec& a, const SymmetricSpaceSpec& b) {
    const auto ka = family_key(a), kb = family_key(b);
    return ka != kb ? ka < kb : a.family_n < b.family_n;
  });
  return out;
}

std::vector<SymmetricSpaceSpec> auxiliary_spaces() {
  std::vector<SymmetricSpaceSpec> out;
  out.push_back(hyperbolic_space(2));
  out.push_back(hyperbolic_space(3));
  out.push_back(aii_space(2));
  out.push_back(aii_space(3));
  // Exceptional quotients beyond the bound pipeline; only EIV falls in the
  // (1, sqrt2) class.
  out.push_back(make_aux("EI", CartanLabel::EI, 42, 78, 24, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EII", CartanLabel::EII, 40, 78, 24, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EIII", CartanLabel::EIII, 32, 78, 24, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EIV", CartanLabel::EIV, 26, 78, 24, ConstantsClass::OneSqrt2));
  out.push_back(make_aux("EV", CartanLabel::EV, 70, 133, 36, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EVI", CartanLabel::EVI, 64, 133, 36, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EVII", CartanLabel::EVII, 54, 133, 36, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EVIII", CartanLabel::EVIII, 128, 248, 60, ConstantsClass::EqualSqrt2));
  out.push_back(make_aux("EIX", CartanLabel::EIX, 112, 248, 60, ConstantsClass::EqualSqrt2));
  std::sort(out.begin(), out.end(),
            [](const SymmetricSpaceSpec& a, const SymmetricSpaceSpec& b) { return a.id < b.id; });
  return out;
}

std::optional<SymmetricSpaceSpec> find_space(std::string_view id) {
  if (id == "OH.2") return octonionic_hyperbolic_plane();
  if (id == "G2_2") return g2_split_quotient();
  if (id == "F4_4") return f4_split_quotient();
  if (const auto n = parse_family_n(id, "H.")) {
    if (*n >= 2 && *n <= 500) return hyperbolic_space(*n);
    return std::nullopt;
  }
  if (const auto n = parse_family_n(id, "CH.")) {
    if (*n >= 2 && *n <= 500) return complex_hyperbolic_space(*n);
    return std::nullopt;
  }
  if (const auto n = parse_family_n(id, "AII.")) {
    if (*n >= 2 && *n <= 500) return aii_space(*n);
    return std::nullopt;
  }
  for (auto& s : auxiliary_spaces())
    if (s.id == id) return s;
  return std::nullopt;
}

LogReal k_volume_value(const SymmetricSpaceSpec& space) {
  if (!space.k_volume)
    throw std::invalid_argument("no compact-group volume stored for " + space.id);
  return space.k_volume->evaluate();
}

std::string to_string(CartanLabel label) {
  switch (label) {
    case CartanLabel::AI: return "AI";
    case CartanLabel::AII: return "AII";
    case CartanLabel::AIII: return "AIII";
    case CartanLabel::BI: return "BI";
    case CartanLabel::CI: return "CI";
    case CartanLabel::CII: return "CII";
    case CartanLabel::DI: return "DI";
    case CartanLabel::DIII: return "DIII";
    case CartanLabel::EI: return "EI";
    case CartanLabel::EII: return "EII";
    case CartanLabel::EIII: return "EIII";
    case CartanLabel::EIV: return "EIV";
    case CartanLabel::EV: return "EV";
    case CartanLabel::EVI: return "EVI";
    case CartanLabel::EVII: return "EVII";
    case CartanLabel::EVIII: return "EVIII";
    case CartanLabel::EIX: return "EIX";
    case CartanLabel::FI: return "FI";
    case CartanLabel::FII: return "FII";
    case CartanLabel::G: return "G";
    case CartanLabel::TypeIV: return "TYPE_IV";
  }
  return "?";
}

std::string to_string(ConstantsClass cls) {
  switch (cls) {
    case ConstantsClass::EqualSqrt2: return "EQUAL_SQRT2";
    case ConstantsClass::OneSqrt2: return "ONE_SQRT2";
    case ConstantsClass::H3Special: return "H3_SPECIAL";
  }
  return "?";
}

std::optional<ConstantsClass> constants_class_from_string(std::string_view text) {
  if (text == "EQUAL_SQRT2") return ConstantsClass::EqualSqrt2;
  if (text == "ONE_SQRT2") return ConstantsClass::OneSqrt2;
  if (text == "H3_SPECIAL") return ConstantsClass::H3Special;
  return std::nullopt;
}

}  // namespace catalog
}  // namespace covol
