#include "covol/constants.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace covol {

namespace {

const double kSqrt2 = std::sqrt(2.0);

RestrictedRootSystem make_rank_one(Rational gram, std::vector<RestrictedRootSystem::Root> roots) {
  RestrictedRootSystem r;
  r.ambient_dim = 1;
  r.gram = {{gram}};
  r.roots = std::move(roots);
  return r;
}

// H.n, n >= 4: single restricted root of unit dual norm, multiplicity n-1.
RestrictedRootSystem hyperbolic_roots(int n) {
  return make_rank_one(Rational(1), {{{Rational(1)}, n - 1}});
}

// CH.n: the restriction of the maximal root (dual norm sqrt2, multiplicity 1)
// plus its half (multiplicity 2n-2); coordinates where the metric is 2 t^2.
RestrictedRootSystem complex_hyperbolic_roots(int n) {
  return make_rank_one(Rational(2), {{{Rational(1)}, 2 * n - 2}, {{Rational(2)}, 1}});
}

RestrictedRootSystem cayley_plane_roots() {
  // One-dimensional a with the Euclidean restriction; roots x1 (mult 7) and
  // x1/2 (mult 8).
  return make_rank_one(Rational(1), {{{Rational(1)}, 7}, {{Rational(1, 2)}, 8}});
}

RestrictedRootSystem eiv_roots() {
  // Metric (4/3)(t1^2 + t1 t2 + 7 t2^2); roots t1 - t2, t1 + 2 t2, 3 t2,
  // each with multiplicity 8.
  RestrictedRootSystem r;
  r.ambient_dim = 2;
  r.gram = {{Rational(4, 3), Rational(2, 3)}, {Rational(2, 3), Rational(28, 3)}};
  r.roots = {{{Rational(1), Rational(-1)}, 8},
             {{Rational(1), Rational(2)}, 8},
             {{Rational(0), Rational(3)}, 8}};
  return r;
}

// AII.n: roots t_i - t_j (mult 4) on the trace-zero subspace where the metric
// is 2 sum t_i^2; coordinates t_1..t_{n-1} with t_n eliminated.
RestrictedRootSystem aii_roots(int n) {
  RestrictedRootSystem r;
  r.ambient_dim = n - 1;
  r.gram.assign(n - 1, std::vector<Rational>(n - 1, Rational(2)));
  for (int i = 0; i < n - 1; ++i) r.gram[i][i] = Rational(4);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      RestrictedRootSystem::Root root;
      root.coords.assign(n - 1, Rational(0));
      root.coords[i] = Rational(1);
      root.coords[j] = Rational(-1);
      root.multiplicity = 4;
      r.roots.push_back(std::move(root));
    }
    RestrictedRootSystem::Root last;  // t_i - t_n = 2 t_i + sum_{k != i} t_k
    last.coords.assign(n - 1, Rational(1));
    last.coords[i] = Rational(2);
    last.multiplicity = 4;
    r.roots.push_back(std::move(last));
  }
  return r;
}

RestrictedRootSystem g2_roots() {
  // Split form: the full positive system, multiplicity 1, in coordinates
  // (t1, t2) on the trace-zero plane with metric 3(2 t1^2 + 2 t1 t2 + 2 t2^2).
  RestrictedRootSystem r;
  r.ambient_dim = 2;
  r.gram = {{Rational(6), Rational(3)}, {Rational(3), Rational(6)}};
  const int vals[6][2] = {{1, -1}, {2, 1}, {1, 2}, {3, 0}, {0, 3}, {3, 3}};
  for (const auto& v : vals)
    r.roots.push_back({{Rational(v[0]), Rational(v[1])}, 1});
  return r;
}

RestrictedRootSystem f4_roots() {
  // Split form: x_i, x_i +- x_j, (x1 +- x2 +- x3 +- x4)/2 with the Euclidean
  // Gram matrix; 24 positive roots, multiplicity 1.
  RestrictedRootSystem r;
  r.ambient_dim = 4;
  r.gram.assign(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i) r.gram[i][i] = Rational(1);
  auto add = [&r](std::vector<Rational> c) { r.roots.push_back({std::move(c), 1}); };
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> c(4, Rational(0));
    c[i] = Rational(1);
    add(c);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (const int s : {1, -1}) {
        std::vector<Rational> c(4, Rational(0));
        c[i] = Rational(1);
        c[j] = Rational(s);
        add(c);
      }
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        add({Rational(1, 2), Rational(s2, 2), Rational(s3, 2), Rational(s4, 2)});
  return r;
}

}  // namespace

ConstantsProfile classify_constants(const SymmetricSpaceSpec& space) {
  ConstantsProfile p;
  switch (space.constants_class) {
    case ConstantsClass::EqualSqrt2:
      p.c1 = kSqrt2;
      p.c2 = kSqrt2;
      break;
    case ConstantsClass::OneSqrt2:
      p.c1 = 1.0;
      p.c2 = kSqrt2;
      break;
    case ConstantsClass::H3Special:
      p.c1 = 1.0;
      p.c2 = 1.0;
      break;
  }
  p.alpha_ratio = p.c2 / p.c1;
  return p;
}

double c1_from_restricted_roots(const RestrictedRootSystem& rrs) {
  if (rrs.ambient_dim < 1) throw std::invalid_argument("restricted roots: ambient_dim must be positive");
  if (rrs.roots.empty()) throw std::invalid_argument("restricted roots: empty root list");
  const int dim = rrs.ambient_dim;
  if (static_cast<int>(rrs.gram.size()) != dim)
    throw std::invalid_argument("restricted roots: Gram matrix has wrong size");

  Eigen::MatrixXd q(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rrs.gram[i].size()) != dim)
      throw std::invalid_argument("restricted roots: Gram matrix has wrong size");
    for (int j = 0; j < dim; ++j) q(i, j) = rrs.gram[i][j].to_double();
  }
  if (!q.isApprox(q.transpose(), 1e-12))
    throw std::invalid_argument("restricted roots: Gram matrix is not symmetric");

  const Eigen::LLT<Eigen::MatrixXd> llt(q);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("restricted roots: Gram matrix is not positive definite");

  // sup over unit H of |a(H)| is the dual norm sqrt(a^T Q^{-1} a); solve
  // Q y = a instead of inverting.
  double best = 0.0;
  for (const auto& root : rrs.roots) {
    if (static_cast<int>(root.coords.size()) != dim)
      throw std::invalid_argument("restricted roots: root has wrong dimension");
    Eigen::VectorXd a(dim);
    for (int i = 0; i < dim; ++i) a(i) = root.coords[i].to_double();
    if (a.isZero(0.0)) throw std::invalid_argument("restricted roots: zero root vector");
    const Eigen::VectorXd y = llt.solve(a);
    best = std::max(best, std::sqrt(a.dot(y)));
  }
  return best;
}

bool verify_classification(const SymmetricSpaceSpec& space, const RestrictedRootSystem& rrs) {
  const double expected = classify_constants(space).c1;
  return std::fabs(c1_from_restricted_roots(rrs) - expected) <= 1e-9;
}

std::optional<RestrictedRootSystem> shipped_root_system(std::string_view space_id) {
  const auto space = catalog::find_space(space_id);
  if (!space) return std::nullopt;
  if (space->id == "OH.2") return cayley_plane_roots();
  if (space->id == "EIV") return eiv_roots();
  if (space->id == "G2_2") return g2_roots();
  if (space->id == "F4_4") return f4_roots();
  if (space->family_n > 0) {
    const int n = space->family_n;
    if (space->id.starts_with("AII.")) return aii_roots(n);
    if (space->id.starts_with("CH.")) return complex_hyperbolic_roots(n);
    if (space->id.starts_with("H.")) {
      if (n == 2) return make_rank_one(Rational(2), {{{Rational(2)}, 1}});  // normal real form
      if (n == 3) return make_rank_one(Rational(1), {{{Rational(1)}, 2}});
      return hyperbolic_roots(n);
    }
  }
  return std::nullopt;
}

std::vector<std::string> shipped_root_ids() {
  return {"AII.2", "AII.3", "CH.2", "CH.3", "CH.5", "EIV", "F4_4",
          "G2_2",  "H.2",   "H.3",  "H.4",  "H.9",  "H.12", "OH.2"};
}

}  // namespace covol
