#include "foldedchar/characters.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "foldedchar/linalg.hpp"

namespace foldedchar {

namespace {

// Dominant representative of mu together with the simple-root coefficients of
// lambda - mu, updated along the reflections. Returns false if the
// coefficients go negative (mu is then not a weight of V(lambda)).
bool dominant_rep(const RootDatum& d, Weight mu, std::vector<long long> coeffs, Weight* rep,
                  std::vector<long long>* rep_coeffs) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < d.rank(); ++i)
      if (mu.c[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    coeffs[neg] += mu.c[neg];  // s_i shifts lambda - mu by mu_i * alpha_i
    mu = reflect(d, neg, mu);
  }
  for (long long x : coeffs)
    if (x < 0) return false;
  *rep = std::move(mu);
  *rep_coeffs = std::move(coeffs);
  return true;
}

}  // namespace

Character freudenthal(const RootDatum& d, const Weight& lambda, long long dim_cap) {
  if (static_cast<int>(lambda.rank()) != d.rank())
    throw std::invalid_argument("weight rank does not match the datum");
  if (!d.dominant(lambda)) throw std::invalid_argument("freudenthal requires a dominant weight");
  Int dim = weyl_dimension(d, lambda);
  if (dim > dim_cap)
    throw std::runtime_error("module dimension " + dim.str() + " exceeds cap " +
                             std::to_string(dim_cap));

  const auto proots = positive_roots(d);

  // Support enumeration: breadth-first from lambda subtracting simple roots; a
  // candidate is a weight of V(lambda) iff its dominant representative nu has
  // lambda - nu a non-negative integer combination of simple roots.
  std::map<Weight, std::vector<long long>> support;  // weight -> coeffs of lambda - mu
  std::queue<Weight> work;
  support.emplace(lambda, std::vector<long long>(d.rank(), 0));
  work.push(lambda);
  while (!work.empty()) {
    Weight mu = work.front();
    work.pop();
    const auto coeffs = support.at(mu);
    for (int i = 0; i < d.rank(); ++i) {
      Weight nu = mu - d.simple_root(i);
      if (support.count(nu)) continue;
      auto nc = coeffs;
      ++nc[i];
      Weight rep;
      std::vector<long long> rep_coeffs;
      if (!dominant_rep(d, nu, nc, &rep, &rep_coeffs)) continue;
      support.emplace(nu, std::move(nc));
      work.push(nu);
    }
  }

  // Dominant weights from lambda downward.
  struct Dom {
    Weight mu;
    std::vector<long long> coeffs;
    long long height;
  };
  std::vector<Dom> doms;
  for (const auto& [mu, coeffs] : support) {
    if (!d.dominant(mu)) continue;
    long long ht = 0;
    for (long long x : coeffs) ht += x;
    doms.push_back({mu, coeffs, ht});
  }
  std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu < b.mu;
  });

  std::map<Weight, Int> dom_mult;
  auto mult_at = [&](const Weight& mu, const std::vector<long long>& coeffs) -> Int {
    Weight rep;
    std::vector<long long> rep_coeffs;
    if (!dominant_rep(d, mu, coeffs, &rep, &rep_coeffs)) return 0;
    auto it = dom_mult.find(rep);
    return it == dom_mult.end() ? Int(0) : it->second;
  };

  Weight two_rho = 2LL * d.rho();
  for (const Dom& dom : doms) {
    if (dom.height == 0) {
      dom_mult[dom.mu] = 1;
      continue;
    }
    Int rhs = 0;
    for (const PosRoot& beta : proots) {
      for (long long k = 1; k * beta.height <= dom.height; ++k) {
        Weight w = dom.mu + k * beta.root;
        auto wc = dom.coeffs;
        for (int i = 0; i < d.rank(); ++i) wc[i] -= k * beta.coeffs[i];
        Int m = mult_at(w, wc);
        if (m == 0) break;  // root strings through a weight are unbroken
        rhs += m * sym_form(d, beta.coeffs, w);
      }
    }
    // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda-mu, lambda+mu+2rho)
    Int denom = sym_form(d, dom.coeffs, lambda + dom.mu + two_rho);
    if (denom <= 0) throw std::logic_error("non-positive Freudenthal denominator");
    Int num = 2 * rhs;
    if (num % denom != 0) throw std::logic_error("inexact division in Freudenthal recursion");
    Int m = num / denom;
    if (m <= 0) throw std::logic_error("non-positive Freudenthal multiplicity");
    dom_mult[dom.mu] = m;
  }

  Character ch;
  ch.highest = lambda;
  ch.total = 0;
  for (const Dom& dom : doms) {
    const Int& m = dom_mult.at(dom.mu);
    for (const Weight& w : weyl_orbit(d, dom.mu)) {
      ch.mults[w] = m;
      ch.total += m;
    }
  }
  if (ch.total != dim) throw std::logic_error("Freudenthal total disagrees with Weyl dimension");
  return ch;
}

std::vector<Weight> sorted_support(const RootDatum& d, const Character& ch) {
  // Height of lambda - mu as a rational linear functional: xi with
  // A^T xi = (1, ..., 1), so ht(nu) = xi . nu for nu in the root lattice.
  const int n = d.rank();
  RatMatrix at(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = d.cartan(j, i);
  std::vector<Rat> xi = solve_exact(at, std::vector<Rat>(n, 1));

  std::vector<std::pair<Rat, Weight>> rows;
  for (const auto& [mu, _] : ch.mults) {
    Rat ht = 0;
    for (int i = 0; i < n; ++i) ht += xi[i] * (ch.highest.c[i] - mu.c[i]);
    rows.emplace_back(ht, mu);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<Weight> out;
  out.reserve(rows.size());
  for (auto& [_, mu] : rows) out.push_back(std::move(mu));
  return out;
}

std::vector<Weight> support_invariant(const RootDatum& d, const DiagramAutomorphism& sigma,
                                      const Character& ch) {
  std::vector<Weight> out;
  for (const Weight& mu : sorted_support(d, ch))
    if (is_sigma_invariant(sigma, mu)) out.push_back(mu);
  return out;
}

}  // namespace foldedchar
