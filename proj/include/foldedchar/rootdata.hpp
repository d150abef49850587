#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace foldedchar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Weight in fundamental-weight coordinates: c[i] = <coroot_i, mu>.
struct Weight {
  std::vector<long long> c;

  Weight() = default;
  explicit Weight(std::vector<long long> coords) : c(std::move(coords)) {}

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;  // lexicographic

  std::size_t rank() const { return c.size(); }
};

/// Coweight in simple-coroot coordinates: the element sum_i c[i] * coroot_i of Y.
struct Coweight {
  std::vector<long long> c;

  Coweight() = default;
  explicit Coweight(std::vector<long long> coords) : c(std::move(coords)) {}

  bool operator==(const Coweight&) const = default;
  auto operator<=>(const Coweight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(long long k, const Weight& a);

/// <coweight, weight> = sum_i y_i * <coroot_i, mu> = sum_i y_i * mu_i.
long long pairing(const Coweight& y, const Weight& mu);

/// Finite-type root datum of a simply-connected semisimple group.
///
/// Y has the simple coroots as a basis, X the dual basis of fundamental
/// weights, so cartan(i, j) = <coroot_i, root_j> and the j-th simple root has
/// fundamental coordinates equal to column j of the Cartan matrix.
class RootDatum {
 public:
  /// Validates the Cartan matrix (diagonal 2, non-positive off-diagonal,
  /// symmetric zero pattern, symmetrizable, positive definite) and derives the
  /// minimal symmetrizers and the type label. Throws std::invalid_argument on
  /// any violation.
  explicit RootDatum(std::vector<std::vector<long long>> cartan);

  int rank() const { return rank_; }
  long long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<long long>>& cartan_matrix() const { return cartan_; }

  /// Minimal positive integers d_i with d_i * A[i][j] = d_j * A[j][i].
  long long sym(int i) const { return sym_[i]; }

  const std::string& type_label() const { return type_label_; }

  bool simply_laced() const;

  Weight simple_root(int j) const;
  Coweight simple_coroot(int i) const;

  Weight zero_weight() const { return Weight(std::vector<long long>(rank_, 0)); }
  Weight rho() const { return Weight(std::vector<long long>(rank_, 1)); }

  bool dominant(const Weight& mu) const;

 private:
  int rank_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<long long> sym_;
  std::string type_label_;
};

/// A positive root with its coroot and its expansion in simple roots.
struct PosRoot {
  Weight root;                     // fundamental coordinates
  Coweight coroot;                 // simple-coroot coordinates
  std::vector<long long> coeffs;   // simple-root coordinates of root
  long long height = 0;            // sum of coeffs
};

/// Built-in catalog keyed by labels like "A3", "C2", "G2"; products join
/// components with 'x' ("A1xA1"). Node numbering per type is documented in the
/// README. Throws std::invalid_argument on unknown labels.
RootDatum make_datum(const std::string& type_label);

/// All positive roots by reflection saturation from the simple roots, each
/// paired with its coroot; ordered by height, then lexicographically on
/// fundamental coordinates.
std::vector<PosRoot> positive_roots(const RootDatum& d);

/// s_i(mu) = mu - <coroot_i, mu> * root_i.
Weight reflect(const RootDatum& d, int i, const Weight& mu);

/// Full Weyl orbit of a dominant weight by saturation under simple
/// reflections. Throws std::invalid_argument if lambda is not dominant.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda);

/// Weyl dimension formula, exact: prod_{beta>0} (lambda+rho, beta) / (rho, beta)
/// in the symmetrized form. Throws std::invalid_argument if lambda is not
/// dominant.
Int weyl_dimension(const RootDatum& d, const Weight& lambda);

/// Canonical type label of a finite-type Cartan matrix, up to simultaneous
/// row/column permutation. Throws std::invalid_argument if the matrix is not
/// of finite type.
std::string classify_type(const std::vector<std::vector<long long>>& cartan);

/// (mu, beta) in the symmetrized form, for beta given by its simple-root
/// coefficients: sum_i coeffs[i] * d_i * mu_i.
Int sym_form(const RootDatum& d, const std::vector<long long>& beta_coeffs, const Weight& mu);

}  // namespace foldedchar
