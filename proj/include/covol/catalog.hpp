#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covol/geometry.hpp"
#include "covol/rational.hpp"

namespace covol {

enum class CartanLabel {
  AI, AII, AIII, BI, CI, CII, DI, DIII,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX,
  FI, FII, G, TypeIV,
};

// Which (C1, C2) pair the space carries with respect to the renormalized
// Killing metric: (sqrt2, sqrt2), (1, sqrt2), or the hyperbolic-3-space
// exception (1, 1).
enum class ConstantsClass { EqualSqrt2, OneSqrt2, H3Special };

// Exact symbolic value
//   rational_scalar * 2^pow2 * pi^pow_pi * sqrt(sqrt_int) / prod(f! for f in factorial_denominators)
// used for compact-group volumes, evaluated in log space only after the
// factorials are formed exactly.
struct ExactVolumeExpression {
  long long pow2 = 0;
  Rational pow_pi{0, 1};
  long long sqrt_int = 1;  // square-free
  std::vector<unsigned> factorial_denominators;
  Rational rational_scalar{1, 1};

  LogReal evaluate() const;
};

struct SymmetricSpaceSpec {
  std::string id;
  CartanLabel cartan_label = CartanLabel::BI;
  int family_n = 0;  // parameter for H.n / CH.n / AII.n families, 0 otherwise
  long long N = 0;        // dim(G/K)
  long long d = 0;        // dim(G)
  long long alpha_G = 0;  // twice the dual Coxeter number of G
  ConstantsClass constants_class = ConstantsClass::EqualSqrt2;
  std::optional<ExactVolumeExpression> k_volume;  // Vol(K) in the renormalized metric
  // False for H.2 / H.3 (handled by prior literature) and for entries that
  // only participate in the constants classification.
  bool bound_supported = false;
};

namespace catalog {

// All spaces the bound pipeline covers: OH.2, G2_2, F4_4, H.n (4 <= n <= max_n)
// and CH.n (2 <= n <= max_n), ordered by family id then n. max_n >= 2.
std::vector<SymmetricSpaceSpec> list_spaces(int max_n);

// Entries outside the bound pipeline: H.2, H.3 and the constants-only
// exceptional and AII spaces delivered for the classifier cross-checks.
std::vector<SymmetricSpaceSpec> auxiliary_spaces();

// Lookup by id; parses family ids ("H.7", "CH.3", "AII.2") for 2 <= n <= 500.
std::optional<SymmetricSpaceSpec> find_space(std::string_view id);

// Exact evaluation of the stored K-volume; throws if the space has none.
LogReal k_volume_value(const SymmetricSpaceSpec& space);

SymmetricSpaceSpec hyperbolic_space(int n);          // H.n,  n >= 2
SymmetricSpaceSpec complex_hyperbolic_space(int n);  // CH.n, n >= 2
SymmetricSpaceSpec octonionic_hyperbolic_plane();    // OH.2
SymmetricSpaceSpec g2_split_quotient();              // G2_2
SymmetricSpaceSpec f4_split_quotient();              // F4_4

std::string to_string(CartanLabel label);
std::string to_string(ConstantsClass cls);
std::optional<ConstantsClass> constants_class_from_string(std::string_view text);

}  // namespace catalog
}  // namespace covol
