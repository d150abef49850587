#pragma once

#include <string>
#include <vector>

#include "foldedchar/rootdata.hpp"

namespace foldedchar {

/// Permutation of the node set preserving the Cartan matrix.
struct DiagramAutomorphism {
  std::vector<int> perm;  // perm[i] = sigma(i), 0-based
  int order = 1;          // multiplicative order

  bool is_identity() const;
  int apply(int i) const { return perm[i]; }
};

/// Parses whitespace-separated parenthesized cycles of 1-based node indices,
/// e.g. "(1 3)(2 4)". Omitted nodes are fixed; the empty string is the
/// identity. Throws std::invalid_argument on malformed input, out-of-range or
/// repeated indices.
DiagramAutomorphism parse_cycles(const std::string& text, int rank);

/// Identity automorphism on `rank` nodes.
DiagramAutomorphism identity_automorphism(int rank);

/// True iff A[sigma(i)][sigma(j)] = A[i][j] for all i, j.
bool preserves_cartan(const RootDatum& d, const DiagramAutomorphism& sigma);

/// Sigma-orbits on the node set, ordered by minimal element; within an orbit
/// the elements follow the cycle from the minimal one. Throws
/// std::invalid_argument if sigma does not preserve the Cartan matrix.
std::vector<std::vector<int>> sigma_orbits(const RootDatum& d, const DiagramAutomorphism& sigma);

/// Number of unordered pairs {i, j} in the orbit with root_i + root_j a root.
int orbit_h(const RootDatum& d, const std::vector<int>& orbit);

/// sigma acts on X by permuting fundamental weights; invariance means the
/// coordinates are constant on sigma-orbits.
bool is_sigma_invariant(const DiagramAutomorphism& sigma, const Weight& mu);

/// The folded root datum built from a simply-laced datum and a nontrivial
/// diagram automorphism: nodes are the sigma-orbits O, the orbit root is
/// alpha_O = 2^h * sum_{i in O} alpha_i, the orbit coroot is the image of any
/// coroot_i (i in O) in Y_sigma, and the folded Cartan entry is
/// <coroot_O, alpha_{O'}>.
struct FoldedDatum {
  RootDatum source;
  DiagramAutomorphism sigma;
  std::vector<std::vector<int>> orbits;  // ordered by minimal element
  std::vector<int> h_values;             // per orbit
  std::vector<Weight> alpha_orbit;       // per orbit, in source coordinates
  std::vector<int> orbit_of;             // source node -> orbit index
  RootDatum folded;

  /// Coordinate isomorphism from sigma-invariant source weights to folded
  /// weights: folded coordinate at O is the common value mu_i for i in O.
  /// Throws std::invalid_argument if mu is not sigma-invariant.
  Weight to_folded_weight(const Weight& mu) const;

  /// Inverse of to_folded_weight: source coordinates constant on each orbit.
  Weight from_folded_weight(const Weight& folded_mu) const;

  /// Projection Y -> Y_sigma on coweight coordinates: folded coordinate at O
  /// is the sum of the source coordinates over O.
  Coweight project_coweight(const Coweight& y) const;
};

FoldedDatum fold(const RootDatum& d, const DiagramAutomorphism& sigma);

/// True iff lambda is sigma-invariant and dominant; equivalently its folded
/// coordinates are all non-negative.
bool dominant_invariant_check(const FoldedDatum& f, const Weight& lambda);

}  // namespace foldedchar
