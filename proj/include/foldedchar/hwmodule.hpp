#pragma once

#include <map>
#include <vector>

#include "foldedchar/characters.hpp"
#include "foldedchar/folding.hpp"
#include "foldedchar/linalg.hpp"
#include "foldedchar/rootdata.hpp"

namespace foldedchar {

/// Lowering word (i_1, ..., i_k) standing for f_{i_1} ... f_{i_k} applied to
/// the highest weight vector. The empty word is the highest weight vector.
using Word = std::vector<int>;

/// Integer combination of lowering words.
using Combo = std::map<Word, Int>;

/// weight(word) = lambda - sum_j alpha_{i_j}.
Weight word_weight(const RootDatum& d, const Weight& lambda, const Word& w);

/// Memoizing calculator for raising-operator actions and the contravariant
/// (Shapovalov) form on lowering words, for a fixed (datum, lambda).
///
/// e_i(f_j w) = f_j (e_i w) + delta_ij <coroot_i, weight(w)> w, with
/// e_i applied to the empty word giving 0; the form satisfies <eta, eta> = 1
/// and <f_i x, y> = <x, e_i y>, and vanishes across distinct weights.
class FormCalculator {
 public:
  FormCalculator(const RootDatum& d, Weight lambda) : d_(d), lambda_(std::move(lambda)) {}

  Combo e_action(int i, const Word& w);
  Combo e_action(int i, const Combo& v);

  Int form(const Word& a, const Word& b);

 private:
  const RootDatum& d_;
  Weight lambda_;
  std::map<std::pair<int, Word>, Combo> e_cache_;
  std::map<std::pair<Word, Word>, Int> form_cache_;
};

/// Explicit irreducible highest-weight module V(lambda): per weight a chosen
/// monomial basis with the Gram matrix of the contravariant form on it.
class HWModule {
 public:
  struct WeightSpace {
    std::vector<Word> basis;  // lowering words, deterministic order
    IntMatrix gram;           // symmetric, invertible on the chosen basis
  };

  /// Level-by-level construction: candidates at each level are the f_i-images
  /// of the previous level's chosen basis; a maximal subset with invertible
  /// Gram matrix is selected in deterministic candidate order (length, then
  /// lexicographic). Per-weight dimensions are checked against the Freudenthal
  /// multiplicities; a mismatch aborts. Throws std::runtime_error if the
  /// module dimension exceeds the cap.
  HWModule(const RootDatum& d, Weight lambda, long long dim_cap = kDefaultDimCap);

  const RootDatum& datum() const { return d_; }
  const Weight& highest() const { return lambda_; }
  Int dimension() const { return dimension_; }

  const std::map<Weight, WeightSpace>& weight_spaces() const { return spaces_; }

  long long dim_at(const Weight& mu) const;

  /// Exact trace of the sigma-action on the weight space V_mu, where sigma
  /// permutes lowering words letterwise and fixes the highest weight vector.
  /// Each sigma-image is expanded in the chosen basis by an exact solve
  /// against the Gram matrix. Throws std::invalid_argument if mu is not
  /// sigma-invariant or not in the support.
  Int sigma_trace(const DiagramAutomorphism& sigma, const Weight& mu) const;

  /// Access to the module's form calculator (shares the build-time caches).
  FormCalculator& calculator() const { return calc_; }

 private:
  RootDatum d_;
  Weight lambda_;
  mutable FormCalculator calc_;
  std::map<Weight, WeightSpace> spaces_;
  Int dimension_;
};

/// Checks <sigma x, sigma y> = <x, y> on `samples` pseudo-random pairs of
/// lowering words of V(lambda), drawn reproducibly from `seed`.
bool form_sigma_invariance_check(const RootDatum& d, const Weight& lambda,
                                 const DiagramAutomorphism& sigma, int samples,
                                 unsigned long long seed = 0,
                                 long long dim_cap = kDefaultDimCap);

/// Same, reusing an already built module (and its form caches).
bool form_sigma_invariance_check(const HWModule& mod, const DiagramAutomorphism& sigma,
                                 int samples, unsigned long long seed = 0);

}  // namespace foldedchar
