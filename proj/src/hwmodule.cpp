#include "foldedchar/hwmodule.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "foldedchar/linalg.hpp"

namespace foldedchar {

Weight word_weight(const RootDatum& d, const Weight& lambda, const Word& w) {
  Weight mu = lambda;
  for (int i : w) mu = mu - d.simple_root(i);
  return mu;
}

namespace {

Word sorted_letters(const Word& w) {
  Word s = w;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

Combo FormCalculator::e_action(int i, const Word& w) {
  auto key = std::make_pair(i, w);
  if (auto it = e_cache_.find(key); it != e_cache_.end()) return it->second;
  Combo res;
  if (!w.empty()) {
    const int j = w.front();
    Word rest(w.begin() + 1, w.end());
    for (const auto& [v, c] : e_action(i, rest)) {
      Word fv;
      fv.reserve(v.size() + 1);
      fv.push_back(j);
      fv.insert(fv.end(), v.begin(), v.end());
      res[fv] += c;
    }
    if (i == j) {
      // <coroot_i, weight(rest)>
      Int k = lambda_.c[i];
      for (int t : rest) k -= d_.cartan(i, t);
      if (k != 0) res[rest] += k;
    }
    std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
  }
  e_cache_.emplace(std::move(key), res);
  return res;
}

Combo FormCalculator::e_action(int i, const Combo& v) {
  Combo res;
  for (const auto& [w, c] : v)
    for (const auto& [u, cu] : e_action(i, w)) res[u] += c * cu;
  std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
  return res;
}

Int FormCalculator::form(const Word& a, const Word& b) {
  if (sorted_letters(a) != sorted_letters(b)) return 0;  // distinct weights
  if (a.empty()) return 1;                               // <eta, eta> = 1
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (auto it = form_cache_.find(key); it != form_cache_.end()) return it->second;
  const int i = a.front();
  Word rest(a.begin() + 1, a.end());
  Int res = 0;
  for (const auto& [v, c] : e_action(i, b)) res += c * form(rest, v);
  form_cache_.emplace(std::move(key), res);
  return res;
}

HWModule::HWModule(const RootDatum& d, Weight lambda, long long dim_cap)
    : d_(d), lambda_(std::move(lambda)), calc_(d_, lambda_) {
  if (!d_.dominant(lambda_)) throw std::invalid_argument("build_module requires a dominant weight");
  Character ch = freudenthal(d_, lambda_, dim_cap);  // also enforces the cap

  spaces_[lambda_] = {{Word{}}, {{Int(1)}}};
  std::vector<Weight> frontier{lambda_};
  while (!frontier.empty()) {
    // Candidate words at the next level: f_i applied to each chosen basis
    // vector of the current level, grouped by target weight.
    std::map<Weight, std::vector<Word>> candidates;
    for (const Weight& mu : frontier) {
      for (const Word& w : spaces_.at(mu).basis) {
        for (int i = 0; i < d_.rank(); ++i) {
          Word fw;
          fw.reserve(w.size() + 1);
          fw.push_back(i);
          fw.insert(fw.end(), w.begin(), w.end());
          candidates[mu - d_.simple_root(i)].push_back(std::move(fw));
        }
      }
    }
    frontier.clear();
    for (auto& [mu, words] : candidates) {
      std::sort(words.begin(), words.end());

      // Greedy selection of a maximal subset with invertible Gram matrix.
      std::vector<Word> basis;
      IntMatrix gram;
      for (const Word& w : words) {
        std::vector<Int> row;
        row.reserve(basis.size() + 1);
        for (const Word& b : basis) row.push_back(calc_.form(b, w));
        row.push_back(calc_.form(w, w));
        IntMatrix trial = gram;
        for (std::size_t k = 0; k < basis.size(); ++k) trial[k].push_back(row[k]);
        trial.push_back(row);
        if (exact_rank(trial) == static_cast<int>(basis.size()) + 1) {
          basis.push_back(w);
          gram = std::move(trial);
        }
      }
      if (basis.empty()) continue;
      frontier.push_back(mu);
      spaces_[mu] = {std::move(basis), std::move(gram)};
    }
  }

  // Independent cross-check against the Freudenthal multiplicities.
  dimension_ = 0;
  for (const auto& [mu, space] : spaces_) {
    auto it = ch.mults.find(mu);
    if (it == ch.mults.end() || it->second != static_cast<long long>(space.basis.size()))
      throw std::logic_error("module weight-space dimension disagrees with Freudenthal");
    dimension_ += static_cast<long long>(space.basis.size());
  }
  if (spaces_.size() != ch.mults.size() || dimension_ != ch.total)
    throw std::logic_error("module support disagrees with Freudenthal");
}

long long HWModule::dim_at(const Weight& mu) const {
  auto it = spaces_.find(mu);
  return it == spaces_.end() ? 0 : static_cast<long long>(it->second.basis.size());
}

Int HWModule::sigma_trace(const DiagramAutomorphism& sigma, const Weight& mu) const {
  if (!is_sigma_invariant(sigma, mu))
    throw std::invalid_argument("sigma_trace requires a sigma-invariant weight");
  auto it = spaces_.find(mu);
  if (it == spaces_.end()) throw std::invalid_argument("weight outside the module support");
  const auto& [basis, gram] = it->second;
  const std::size_t m = basis.size();

  RatMatrix s(m, std::vector<Rat>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[i][j] = Rat(gram[i][j]);

  Rat trace = 0;
  for (std::size_t k = 0; k < m; ++k) {
    Word image = basis[k];
    for (int& letter : image) letter = sigma.apply(letter);
    std::vector<Rat> g(m);
    for (std::size_t j = 0; j < m; ++j) g[j] = Rat(calc_.form(basis[j], image));
    trace += solve_exact(s, std::move(g))[k];
  }
  if (denominator(trace) != 1) throw std::logic_error("sigma trace is not an integer");
  return numerator(trace);
}

bool form_sigma_invariance_check(const RootDatum& d, const Weight& lambda,
                                 const DiagramAutomorphism& sigma, int samples,
                                 unsigned long long seed, long long dim_cap) {
  HWModule mod(d, lambda, dim_cap);
  return form_sigma_invariance_check(mod, sigma, samples, seed);
}

bool form_sigma_invariance_check(const HWModule& mod, const DiagramAutomorphism& sigma,
                                 int samples, unsigned long long seed) {
  if (!preserves_cartan(mod.datum(), sigma))
    throw std::invalid_argument("sigma does not preserve the Cartan matrix");
  std::vector<Word> pool;
  for (const auto& [_, space] : mod.weight_spaces())
    for (const Word& w : space.basis) pool.push_back(w);

  std::mt19937_64 rng(seed);
  auto pick = [&] { return pool[rng() % pool.size()]; };
  FormCalculator& calc = mod.calculator();
  for (int t = 0; t < samples; ++t) {
    Word a = pick();
    Word b;
    if (rng() % 2 == 0 && a.size() > 1) {
      b = a;  // same weight: a shuffled copy
      for (std::size_t i = b.size() - 1; i > 0; --i) std::swap(b[i], b[rng() % (i + 1)]);
    } else {
      b = pick();
    }
    Word sa = a, sb = b;
    for (int& x : sa) x = sigma.apply(x);
    for (int& x : sb) x = sigma.apply(x);
    if (calc.form(a, b) != calc.form(sa, sb)) return false;
  }
  return true;
}

}  // namespace foldedchar
