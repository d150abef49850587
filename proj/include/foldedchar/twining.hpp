#pragma once

#include <complex>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "foldedchar/characters.hpp"
#include "foldedchar/folding.hpp"
#include "foldedchar/hwmodule.hpp"

namespace foldedchar {

/// tr(sigma | V_mu) over the sigma-invariant weights of V(lambda).
struct TwiningCharacter {
  Weight lambda;
  std::map<Weight, Int> entries;
};

/// Point of T = C^* tensor Y: one nonzero complex coordinate per simple
/// coroot; mu(t) = prod_i z_i^{mu_i}.
struct TorusElement {
  std::vector<std::complex<double>> z;
};

std::complex<double> weight_eval(const TorusElement& t, const Weight& mu);

/// Builds V(lambda) once and evaluates the sigma-trace at every
/// sigma-invariant support weight. Throws std::invalid_argument if lambda is
/// not sigma-invariant dominant.
TwiningCharacter twining_character(const RootDatum& d, const DiagramAutomorphism& sigma,
                                   const Weight& lambda, long long dim_cap = kDefaultDimCap);

/// Same, reusing an already built module.
TwiningCharacter twining_character(const HWModule& mod, const DiagramAutomorphism& sigma);

/// Character of the folded-datum irreducible with highest weight
/// to_folded_weight(lambda), re-indexed back to sigma-invariant source
/// coordinates.
Character folded_character(const FoldedDatum& f, const Weight& lambda,
                           long long dim_cap = kDefaultDimCap);

/// Canonical homomorphism T -> T_sigma: the folded coordinate at O is the
/// product of the source coordinates over O.
TorusElement phi(const FoldedDatum& f, const TorusElement& t);

/// One row of the exact theorem comparison at a sigma-invariant weight.
struct JantzenRow {
  Weight mu;
  Int trace;       // tr(sigma | V_mu)
  Int folded_dim;  // dim V'_mu, 0 off the folded support
  bool ok = false;
};

struct JantzenReport {
  std::vector<JantzenRow> rows;  // from lambda downward
  bool ok = false;
};

/// Exact comparison of the twining character with the folded character,
/// including support agreement. A mismatch is a failing report, not an error.
JantzenReport verify_jantzen(const TwiningCharacter& tw, const Character& folded_ch,
                             const RootDatum& source);

struct CorollarySample {
  double error = 0.0;
  bool ok = false;
};

struct CorollaryReport {
  std::vector<CorollarySample> samples;
  double tol = 0.0;
  bool ok = false;
};

/// |tr(t sigma, V) - tr(phi(t), V')| for one torus element; only
/// sigma-invariant weight spaces contribute to the left side.
double corollary_error(const FoldedDatum& f, const TwiningCharacter& tw,
                       const Character& folded_ch, const TorusElement& t);

/// Checks the corollary on `samples` torus elements with unit-modulus
/// coordinates drawn reproducibly from `seed`.
CorollaryReport verify_corollary(const FoldedDatum& f, const TwiningCharacter& tw,
                                 const Character& folded_ch, int samples, double tol,
                                 unsigned long long seed);

/// Unit-modulus torus element from a seeded generator.
TorusElement random_unit_torus(int rank, std::mt19937_64& rng);

/// One verification case: folding, twining character, folded character, and
/// both reports. The built module is exposed for further structural checks.
struct VerifiedCase {
  FoldedDatum folded;
  std::shared_ptr<HWModule> module;
  TwiningCharacter twining;
  Character folded_ch;  // source-indexed
  JantzenReport jantzen;
  CorollaryReport corollary;

  bool ok() const { return jantzen.ok && corollary.ok; }
};

VerifiedCase verify_case(const RootDatum& d, const DiagramAutomorphism& sigma,
                         const Weight& lambda, long long dim_cap = kDefaultDimCap,
                         int torus_samples = 10, double tol = 1e-8,
                         unsigned long long seed = 0);

}  // namespace foldedchar
