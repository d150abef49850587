#include "foldedchar/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace foldedchar {

namespace {

using Matrix = std::vector<std::vector<long long>>;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_cartan_axioms(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) fail("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail("Cartan matrix is not square");
    if (a[i][i] != 2) fail("Cartan matrix diagonal entry != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) fail("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) fail("asymmetric zero pattern in Cartan matrix");
    }
  }
}

// Minimal positive integer symmetrizers, or empty if the matrix is not
// symmetrizable. Propagates ratios along a spanning tree of each diagram
// component and cross-checks every edge.
std::vector<long long> symmetrizers(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_i * a[i][j] = d_j * a[j][i]
        Rat dj = d[i] * a[i][j] / a[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          q.push(j);
        } else if (d[j] != dj) {
          return {};
        }
      }
    }
  }
  // Scale each component to minimal positive integers.  Components are
  // independent, so scale globally by the lcm of denominators and then divide
  // each connected component by the gcd of its entries.
  Int denom_lcm = 1;
  for (const Rat& x : d) denom_lcm = lcm(denom_lcm, Int(denominator(x)));
  std::vector<Int> di(n);
  for (int i = 0; i < n; ++i) di[i] = Int(numerator(d[i])) * (denom_lcm / Int(denominator(d[i])));

  // Component-wise gcd reduction.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j)
        if (i != j && a[i][j] != 0 && comp[j] < 0) {
          comp[j] = ncomp;
          q.push(j);
        }
    }
    ++ncomp;
  }
  std::vector<Int> g(ncomp, 0);
  for (int i = 0; i < n; ++i) g[comp[i]] = gcd(g[comp[i]], di[i]);
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = (di[i] / g[comp[i]]).convert_to<long long>();
  return out;
}

// Leading principal minors of the symmetrized matrix, all required positive
// for finite type. Exact integer determinants via Bareiss elimination.
bool positive_definite(const Matrix& a, const std::vector<long long>& d) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Int(d[i]) * a[i][j];
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;  // leading minor ratio must stay positive
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return true;
}

// ---- type catalog -----------------------------------------------------------
//
// Canonical Cartan matrices in the convention A[i][j] = <coroot_i, root_j>.
// The B/C orientation follows the folding catalog documented in the README:
//   Cn (n >= 2): chain with A[n-1][n] = -1, A[n][n-1] = -2 (last node short),
//   Bn (n >= 3): chain with A[n-1][n] = -2, A[n][n-1] = -1 (last node long).
// Rank 2 double-bond matrices always classify as C2.

Matrix chain(int n) {
  Matrix a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

Matrix type_A(int n) { return chain(n); }

Matrix type_C(int n) {
  Matrix a = chain(n);
  a[n - 2][n - 1] = -1;
  a[n - 1][n - 2] = -2;
  return a;
}

Matrix type_B(int n) {
  Matrix a = chain(n);
  a[n - 2][n - 1] = -2;
  a[n - 1][n - 2] = -1;
  return a;
}

Matrix type_D(int n) {
  // Bourbaki: chain 1..n-2 with both n-1 and n attached to n-2.
  Matrix a = chain(n - 1);
  a.resize(n);
  a[n - 1].assign(n, 0);
  for (int i = 0; i + 1 < n; ++i) a[i].push_back(0);
  a[n - 1][n - 1] = 2;
  a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
  a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  return a;
}

Matrix type_E(int n) {
  // Bourbaki: chain 1-3-4-...-n with node 2 attached to node 4.
  Matrix a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  link(1, 3);
  link(2, 4);
  for (int k = 3; k < n; ++k) link(k, k + 1);
  return a;
}

Matrix type_F4() {
  Matrix a = chain(4);
  a[1][2] = -1;
  a[2][1] = -2;
  return a;
}

Matrix type_G2() {
  return {{2, -1}, {-3, 2}};
}

bool simple_label_matrix(char letter, int n, Matrix& out) {
  switch (letter) {
    case 'A':
      if (n < 1) return false;
      out = type_A(n);
      return true;
    case 'B':
      if (n < 3) return false;
      out = type_B(n);
      return true;
    case 'C':
      if (n < 2) return false;
      out = type_C(n);
      return true;
    case 'D':
      if (n < 4) return false;
      out = type_D(n);
      return true;
    case 'E':
      if (n < 6 || n > 8) return false;
      out = type_E(n);
      return true;
    case 'F':
      if (n != 4) return false;
      out = type_F4();
      return true;
    case 'G':
      if (n != 2) return false;
      out = type_G2();
      return true;
    default:
      return false;
  }
}

// Backtracking search for a node bijection with
// a[p[i]][p[j]] == b[i][j] for all i, j.
bool permutation_equivalent(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (a[cand][p[j]] != b[i][j] || a[p[j]][cand] != b[j][i]) ok = false;
      }
      if (!ok) continue;
      p[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      p[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::string classify_component(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  // Fixed order makes rank-2 double-bond matrices resolve to C2.
  static constexpr char letters[] = {'A', 'C', 'B', 'D', 'E', 'F', 'G'};
  for (char letter : letters) {
    Matrix cand;
    if (!simple_label_matrix(letter, n, cand)) continue;
    if (permutation_equivalent(cand, a)) return std::string(1, letter) + std::to_string(n);
  }
  fail("Cartan matrix is not of finite type");
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Weight operator*(long long k, const Weight& a) {
  Weight r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

long long pairing(const Coweight& y, const Weight& mu) {
  long long s = 0;
  for (std::size_t i = 0; i < y.c.size(); ++i) s += y.c[i] * mu.c[i];
  return s;
}

RootDatum::RootDatum(std::vector<std::vector<long long>> cartan) : cartan_(std::move(cartan)) {
  check_cartan_axioms(cartan_);
  rank_ = static_cast<int>(cartan_.size());
  sym_ = symmetrizers(cartan_);
  if (sym_.empty()) fail("Cartan matrix is not symmetrizable");
  if (!positive_definite(cartan_, sym_)) fail("Cartan matrix is not of finite type");
  type_label_ = classify_type(cartan_);
}

bool RootDatum::simply_laced() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (i != j && cartan_[i][j] < -1) return false;
  return true;
}

Weight RootDatum::simple_root(int j) const {
  std::vector<long long> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = cartan_[i][j];
  return Weight(std::move(c));
}

Coweight RootDatum::simple_coroot(int i) const {
  std::vector<long long> c(rank_, 0);
  c[i] = 1;
  return Coweight(std::move(c));
}

bool RootDatum::dominant(const Weight& mu) const {
  for (long long x : mu.c)
    if (x < 0) return false;
  return true;
}

std::string classify_type(const std::vector<std::vector<long long>>& cartan) {
  check_cartan_axioms(cartan);
  auto d = symmetrizers(cartan);
  if (d.empty() || !positive_definite(cartan, d)) fail("Cartan matrix is not of finite type");
  const int n = static_cast<int>(cartan.size());

  // Connected components of the diagram.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      members[id].push_back(i);
      for (int j = 0; j < n; ++j)
        if (i != j && cartan[i][j] != 0 && comp[j] < 0) {
          comp[j] = id;
          q.push(j);
        }
    }
  }

  std::vector<std::string> labels;
  for (const auto& nodes : members) {
    Matrix sub(nodes.size(), std::vector<long long>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = cartan[nodes[i]][nodes[j]];
    labels.push_back(classify_component(sub));
  }
  std::sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
    if (x[0] != y[0]) return x[0] < y[0];
    return std::stoi(x.substr(1)) < std::stoi(y.substr(1));
  });
  std::string out = labels[0];
  for (std::size_t k = 1; k < labels.size(); ++k) out += "x" + labels[k];
  return out;
}

RootDatum make_datum(const std::string& type_label) {
  // Product labels join simple components with 'x'.
  std::vector<Matrix> blocks;
  std::size_t pos = 0;
  while (pos < type_label.size()) {
    std::size_t next = type_label.find('x', pos);
    std::string part = type_label.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
      fail("unknown type label: " + type_label);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1) fail("unknown type label: " + type_label);
    } catch (const std::invalid_argument&) {
      fail("unknown type label: " + type_label);
    } catch (const std::out_of_range&) {
      fail("unknown type label: " + type_label);
    }
    Matrix m;
    if (!simple_label_matrix(part[0], n, m)) fail("unknown type label: " + part);
    blocks.push_back(std::move(m));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (blocks.empty()) fail("unknown type label: " + type_label);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  Matrix a(total, std::vector<long long>(total, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return RootDatum(std::move(a));
}

std::vector<PosRoot> positive_roots(const RootDatum& d) {
  const int n = d.rank();
  // Saturate (root, coroot) pairs under simultaneous simple reflections,
  // keeping the positive ones. Keyed by simple-root coefficients.
  std::map<std::vector<long long>, PosRoot> found;
  std::queue<std::vector<long long>> work;
  for (int j = 0; j < n; ++j) {
    PosRoot r;
    r.root = d.simple_root(j);
    r.coroot = d.simple_coroot(j);
    r.coeffs.assign(n, 0);
    r.coeffs[j] = 1;
    r.height = 1;
    found.emplace(r.coeffs, r);
    work.push(r.coeffs);
  }
  while (!work.empty()) {
    PosRoot cur = found.at(work.front());
    work.pop();
    for (int i = 0; i < n; ++i) {
      long long k = cur.root.c[i];  // <coroot_i, root>
      if (k == 0) continue;
      PosRoot next = cur;
      next.root = cur.root - k * d.simple_root(i);
      next.coeffs[i] -= k;
      next.height -= k;
      long long kc = 0;  // <coroot, root_i>
      for (int t = 0; t < n; ++t) kc += cur.coroot.c[t] * d.cartan(t, i);
      next.coroot.c[i] -= kc;
      bool positive = true;
      for (long long x : next.coeffs)
        if (x < 0) positive = false;
      if (!positive) continue;
      if (found.emplace(next.coeffs, next).second) work.push(next.coeffs);
    }
  }
  std::vector<PosRoot> out;
  out.reserve(found.size());
  for (auto& [_, r] : found) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const PosRoot& x, const PosRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.root < y.root;
  });
  return out;
}

Weight reflect(const RootDatum& d, int i, const Weight& mu) {
  return mu - mu.c[i] * d.simple_root(i);
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda) {
  if (!d.dominant(lambda)) fail("weyl_orbit requires a dominant weight");
  std::set<Weight> seen{lambda};
  std::queue<Weight> work;
  work.push(lambda);
  while (!work.empty()) {
    Weight mu = work.front();
    work.pop();
    for (int i = 0; i < d.rank(); ++i) {
      Weight nu = reflect(d, i, mu);
      if (seen.insert(nu).second) work.push(nu);
    }
  }
  return {seen.begin(), seen.end()};
}

Int sym_form(const RootDatum& d, const std::vector<long long>& beta_coeffs, const Weight& mu) {
  Int s = 0;
  for (int i = 0; i < d.rank(); ++i) s += Int(beta_coeffs[i]) * d.sym(i) * mu.c[i];
  return s;
}

Int weyl_dimension(const RootDatum& d, const Weight& lambda) {
  if (!d.dominant(lambda)) fail("weyl_dimension requires a dominant weight");
  Weight lr = lambda + d.rho();
  Int num = 1, den = 1;
  for (const PosRoot& beta : positive_roots(d)) {
    num *= sym_form(d, beta.coeffs, lr);
    den *= sym_form(d, beta.coeffs, d.rho());
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

}  // namespace foldedchar
