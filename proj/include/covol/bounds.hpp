#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covol/catalog.hpp"
#include "covol/constants.hpp"
#include "covol/geometry.hpp"

namespace covol {

// Paper mode evaluates with the rounded constants behind the published
// tables (pinned per constants class below); precise mode recomputes r and k
// at full precision and uses the exact integration limit r sqrt(k).
enum class BoundMode { Paper, Precise };

struct BoundResult {
  std::string space_id;
  BoundMode mode = BoundMode::Paper;
  ConstantsProfile profile;
  double r_used = 0.0;
  double k_used = 0.0;
  double limit_used = 0.0;   // integration upper limit actually used
  LogReal normalization;     // (alpha_G / (2(N-1)))^{N/2}
  LogReal k_volume_reciprocal;
  LogReal ball_term;         // 2 (pi/k)^{d/2} / Gamma(d/2) * I_{d-1}(limit)
  LogReal bound;             // product of the three factors
};

// Lower bound for the volume of any orbifold quotient of the space, in the
// Ricci-normalized metric. Refuses H.2 / H.3 and spaces without a stored
// K-volume.
BoundResult compute_bound(const SymmetricSpaceSpec& space, BoundMode mode);

enum class BoundFamily { Hyperbolic, ComplexHyperbolic, AllFixed };

struct BoundTableRow {
  std::string space_id;
  std::optional<BoundResult> result;
  std::string error;  // set when result is absent
};

// One row per space; per-space failures become error rows instead of
// aborting the table. The n range is ignored for AllFixed.
std::vector<BoundTableRow> bound_table(BoundFamily family, int n_min, int n_max, BoundMode mode);

std::string to_string(BoundMode mode);
std::optional<BoundMode> bound_mode_from_string(std::string_view text);

}  // namespace covol
