#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wflag/rational.hpp"

namespace wflag {

enum class LieType { A, B, C, D, G2, E6 };

std::string lie_type_to_string(LieType t);

// A root system realized in a fixed rational coordinate space of dimension
// `dim` (which may exceed `rank`, e.g. gl-style coordinates for type A).
// `gram` is the inner product matrix of the coordinate basis, so
// (x, y) = x^T gram y. Pairings of a vector against a coweight use the
// plain coordinate dot product.
struct RootSystem {
  LieType lie_type;
  int rank = 0;
  int dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> positive_roots;
  RationalVector rho;  // half sum of positive roots
  std::vector<RationalVector> gram;
  // simple_coroots[i] represents alpha_i^vee against the plain dot product:
  // <x, alpha_i^vee> = dot(x, simple_coroots[i]).
  std::vector<RationalVector> simple_coroots;
  // Fixed integral regular direction: <alpha, aux> != 0 (plain dot) for
  // every root alpha, and integral against the weight lattice. Used to
  // resolve degenerate gradings.
  Coweight aux_direction;

  std::string name() const;
};

struct WeylElement {
  std::vector<RationalVector> matrix;  // acts on coordinate column vectors
  int sign = 1;                        // determinant, +-1
};

// One weight with multiplicity.
struct WeightLine {
  RationalVector weight;
  long multiplicity = 1;
};

struct WeightSystem {
  std::vector<WeightLine> lines;  // sorted, deterministic
  long total() const;             // sum of multiplicities
};

// Supported: A with 1 <= rank <= 6, C with rank 3, D with rank 5, G2, E6.
// Anything else throws validation_error.
RootSystem build_root_system(LieType type, int rank);

// Plain coordinate dot product <v, mu>.
Rat pair(const RationalVector& v, const Coweight& mu);
Rat pair(const RationalVector& v, const RationalVector& mu);

// Inner product via the Gram matrix.
Rat inner(const RootSystem& rs, const RationalVector& x, const RationalVector& y);
// <x, alpha^vee> = 2 (x, alpha) / (alpha, alpha).
Rat coroot_pairing(const RootSystem& rs, const RationalVector& x, const RationalVector& alpha);
// Reflection of x in the hyperplane of alpha.
RationalVector reflect(const RootSystem& rs, const RationalVector& x, const RationalVector& alpha);
// Reflection at the i-th simple root via the precomputed coroot vector.
RationalVector reflect_simple(const RootSystem& rs, const RationalVector& x, int i);

bool is_dominant(const RootSystem& rs, const RationalVector& lambda);
// Integral dominant weight check used by ops that require one.
void require_dominant_weight(const RootSystem& rs, const RationalVector& lambda,
                             const std::string& where);

// Full Weyl group as matrices, generated by simple reflections via
// breadth-first closure. Deduplicated exactly and sorted by matrix entries.
// `cap` bounds the element count; 0 means use WFLAG_WEYL_CAP from the
// environment, or 1000000 if unset. Exceeding the cap throws resource_error.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap = 0);

// Orbit of a vector under W, computed by reflection closure on vectors
// (never materializes the group). Sorted lexicographically.
std::vector<RationalVector> orbit(const RootSystem& rs, const RationalVector& v);

// Order of W computed from the orbit of the regular vector rho.
std::size_t weyl_order(const RootSystem& rs);

// One Weyl chamber walk datum for series evaluation: the images of rho and
// of lambda under the same group element, and its sign.
struct OrbitPoint {
  RationalVector w_rho;
  RationalVector w_lambda;
  int sign = 1;
};

// All |W| triples (w rho, w lambda, det w), BFS over the regular rho-orbit.
// Deterministic order.
std::vector<OrbitPoint> annotated_rho_orbit(const RootSystem& rs,
                                            const RationalVector& lambda);

// dim V_lambda by the Weyl dimension formula. Requires dominant integral lambda.
Int weyl_dim(const RootSystem& rs, const RationalVector& lambda);

// Weights of V_lambda with multiplicities, via Freudenthal's recursion on
// dominant weights followed by orbit expansion.
WeightSystem weight_system(const RootSystem& rs, const RationalVector& lambda);

// Number of positive roots alpha with <lambda, alpha^vee> != 0; this is the
// dimension of the flag variety G/P attached to lambda.
int flag_dimension(const RootSystem& rs, const RationalVector& lambda);

}  // namespace wflag
