#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covol/catalog.hpp"
#include "covol/rational.hpp"

namespace covol {

// Operator-norm suprema of ad(X) over unit X in the tangent part (c1) and the
// isotropy part (c2) of the Cartan decomposition, for the renormalized
// Killing metric.
struct ConstantsProfile {
  double c1 = 0.0;
  double c2 = 0.0;
  double alpha_ratio = 0.0;  // c2 / c1
};

ConstantsProfile classify_constants(const SymmetricSpaceSpec& space);

// Positive restricted roots of a symmetric space as covectors on the maximal
// abelian subalgebra, with the Gram matrix of the metric in the same
// coordinates. Stored as exact rationals; the floating solve happens on
// conversion.
struct RestrictedRootSystem {
  struct Root {
    std::vector<Rational> coords;
    int multiplicity = 1;
  };

  int ambient_dim = 0;
  std::vector<std::vector<Rational>> gram;  // ambient_dim x ambient_dim
  std::vector<Root> roots;
};

// C1 from root data: the largest dual norm sqrt(a^T Q^{-1} a) over the stored
// roots, which equals sup over unit H of max |a(H)|. Rejects a Gram matrix
// that is not positive definite and an empty root list.
double c1_from_restricted_roots(const RestrictedRootSystem& rrs);

// True iff the dual-norm value agrees with the classifier's C1 to 1e-9.
bool verify_classification(const SymmetricSpaceSpec& space, const RestrictedRootSystem& rrs);

// Compiled-in root data: the worked cases OH.2 (= FII), EIV, AII.2, AII.3,
// the split forms G2_2 and F4_4, and the rank-one families H.n / CH.n.
std::optional<RestrictedRootSystem> shipped_root_system(std::string_view space_id);

// Deterministic list of ids exercised by the verification command.
std::vector<std::string> shipped_root_ids();

}  // namespace covol
