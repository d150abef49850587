#include "foldedchar/folding.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace foldedchar {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism identity_automorphism(int rank) {
  DiagramAutomorphism s;
  s.perm.resize(rank);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.order = 1;
  return s;
}

DiagramAutomorphism parse_cycles(const std::string& text, int rank) {
  DiagramAutomorphism s = identity_automorphism(rank);
  std::vector<bool> seen(rank, false);
  long long order = 1;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected node index in cycle notation: " + text);
      int node = std::stoi(text.substr(start, pos - start));
      if (node < 1 || node > rank) fail("node index out of range: " + std::to_string(node));
      if (seen[node - 1]) fail("repeated node index: " + std::to_string(node));
      seen[node - 1] = true;
      cycle.push_back(node - 1);
    }
    if (cycle.size() < 2) fail("cycles must have length >= 2: " + text);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      s.perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    order = std::lcm(order, static_cast<long long>(cycle.size()));
    skip_ws();
  }
  s.order = static_cast<int>(order);
  return s;
}

bool preserves_cartan(const RootDatum& d, const DiagramAutomorphism& sigma) {
  if (static_cast<int>(sigma.perm.size()) != d.rank()) return false;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (d.cartan(sigma.apply(i), sigma.apply(j)) != d.cartan(i, j)) return false;
  return true;
}

std::vector<std::vector<int>> sigma_orbits(const RootDatum& d, const DiagramAutomorphism& sigma) {
  if (!preserves_cartan(d, sigma)) fail("sigma does not preserve the Cartan matrix");
  std::vector<bool> done(d.rank(), false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < d.rank(); ++i) {
    if (done[i]) continue;
    std::vector<int> orbit;
    int j = i;
    do {
      orbit.push_back(j);
      done[j] = true;
      j = sigma.apply(j);
    } while (j != i);
    orbits.push_back(std::move(orbit));
  }
  return orbits;  // already ordered by minimal element, cycle order within
}

int orbit_h(const RootDatum& d, const std::vector<int>& orbit) {
  std::set<std::vector<long long>> root_coeffs;
  for (const PosRoot& r : positive_roots(d)) root_coeffs.insert(r.coeffs);
  int h = 0;
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b) {
      std::vector<long long> sum(d.rank(), 0);
      sum[orbit[a]] += 1;
      sum[orbit[b]] += 1;
      if (root_coeffs.count(sum)) ++h;
    }
  return h;
}

bool is_sigma_invariant(const DiagramAutomorphism& sigma, const Weight& mu) {
  for (std::size_t i = 0; i < sigma.perm.size(); ++i)
    if (mu.c[sigma.perm[i]] != mu.c[i]) return false;
  return true;
}

FoldedDatum fold(const RootDatum& d, const DiagramAutomorphism& sigma) {
  if (!d.simply_laced()) fail("fold requires a simply-laced source datum");
  if (sigma.is_identity()) fail("fold requires a nontrivial diagram automorphism");
  auto orbits = sigma_orbits(d, sigma);  // validates sigma
  const int m = static_cast<int>(orbits.size());

  std::vector<int> orbit_of(d.rank(), -1);
  for (int o = 0; o < m; ++o)
    for (int i : orbits[o]) orbit_of[i] = o;

  std::vector<int> h_values(m);
  std::vector<Weight> alpha_orbit;
  for (int o = 0; o < m; ++o) {
    h_values[o] = orbit_h(d, orbits[o]);
    Weight a = d.zero_weight();
    for (int i : orbits[o]) a = a + d.simple_root(i);
    a = (1LL << h_values[o]) * a;
    if (!is_sigma_invariant(sigma, a)) throw std::logic_error("alpha_O is not sigma-invariant");
    alpha_orbit.push_back(std::move(a));
  }

  // Folded Cartan entry <coroot_O, alpha_{O'}>, independent of the chosen
  // representative i in O; a failure here signals an invalid sigma.
  std::vector<std::vector<long long>> cartan(m, std::vector<long long>(m));
  for (int o = 0; o < m; ++o)
    for (int p = 0; p < m; ++p) {
      long long value = alpha_orbit[p].c[orbits[o][0]];
      for (int i : orbits[o])
        if (alpha_orbit[p].c[i] != value)
          fail("folded Cartan entry depends on the orbit representative");
      cartan[o][p] = value;
    }

  FoldedDatum f{d, sigma, std::move(orbits), std::move(h_values),
                std::move(alpha_orbit), std::move(orbit_of), RootDatum(std::move(cartan))};
  return f;
}

Weight FoldedDatum::to_folded_weight(const Weight& mu) const {
  if (!is_sigma_invariant(sigma, mu)) fail("weight is not sigma-invariant");
  std::vector<long long> c(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) c[o] = mu.c[orbits[o][0]];
  return Weight(std::move(c));
}

Weight FoldedDatum::from_folded_weight(const Weight& folded_mu) const {
  std::vector<long long> c(source.rank());
  for (int i = 0; i < source.rank(); ++i) c[i] = folded_mu.c[orbit_of[i]];
  return Weight(std::move(c));
}

Coweight FoldedDatum::project_coweight(const Coweight& y) const {
  std::vector<long long> c(orbits.size(), 0);
  for (int i = 0; i < source.rank(); ++i) c[orbit_of[i]] += y.c[i];
  return Coweight(std::move(c));
}

bool dominant_invariant_check(const FoldedDatum& f, const Weight& lambda) {
  return is_sigma_invariant(f.sigma, lambda) && f.source.dominant(lambda);
}

}  // namespace foldedchar
