#pragma once

#include <map>
#include <vector>

#include "foldedchar/folding.hpp"
#include "foldedchar/rootdata.hpp"

namespace foldedchar {

/// Default bound on the module dimension accepted by character and module
/// construction; overridable per call and via FOLDEDCHAR_MAX_DIM in the CLI.
inline constexpr long long kDefaultDimCap = 2000;

/// Weight-multiplicity function of an irreducible highest-weight module, over
/// the full (non-dominant included) support.
struct Character {
  Weight highest;
  std::map<Weight, Int> mults;
  Int total;
};

/// Exact multiplicities of V(lambda) by the Freudenthal recursion: dominant
/// weights processed from lambda downward, extended over Weyl orbits. All
/// divisions in the recursion are exact (asserted). Throws
/// std::invalid_argument if lambda is not dominant, std::runtime_error if the
/// dimension exceeds the cap.
Character freudenthal(const RootDatum& d, const Weight& lambda, long long dim_cap = kDefaultDimCap);

/// Sorts weights from the highest downward: by increasing height of
/// highest - mu, then lexicographically. The deterministic order used for
/// character and report rows.
std::vector<Weight> sorted_support(const RootDatum& d, const Character& ch);

/// The sigma-invariant weights in the support of ch, in sorted_support order.
std::vector<Weight> support_invariant(const RootDatum& d, const DiagramAutomorphism& sigma,
                                      const Character& ch);

}  // namespace foldedchar
