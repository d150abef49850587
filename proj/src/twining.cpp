#include "foldedchar/twining.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace foldedchar {

std::complex<double> weight_eval(const TorusElement& t, const Weight& mu) {
  std::complex<double> v = 1.0;
  for (std::size_t i = 0; i < t.z.size(); ++i) {
    long long k = mu.c[i];
    std::complex<double> base = k >= 0 ? t.z[i] : 1.0 / t.z[i];
    for (long long s = 0; s < std::llabs(k); ++s) v *= base;
  }
  return v;
}

TwiningCharacter twining_character(const HWModule& mod, const DiagramAutomorphism& sigma) {
  TwiningCharacter tw;
  tw.lambda = mod.highest();
  for (const auto& [mu, _] : mod.weight_spaces())
    if (is_sigma_invariant(sigma, mu)) tw.entries[mu] = mod.sigma_trace(sigma, mu);
  return tw;
}

TwiningCharacter twining_character(const RootDatum& d, const DiagramAutomorphism& sigma,
                                   const Weight& lambda, long long dim_cap) {
  if (!preserves_cartan(d, sigma))
    throw std::invalid_argument("sigma does not preserve the Cartan matrix");
  if (!is_sigma_invariant(sigma, lambda))
    throw std::invalid_argument("highest weight is not sigma-invariant");
  if (!d.dominant(lambda)) throw std::invalid_argument("highest weight is not dominant");
  HWModule mod(d, lambda, dim_cap);
  return twining_character(mod, sigma);
}

Character folded_character(const FoldedDatum& f, const Weight& lambda, long long dim_cap) {
  Weight fl = f.to_folded_weight(lambda);
  if (!f.folded.dominant(fl)) throw std::invalid_argument("highest weight is not dominant");
  Character ch = freudenthal(f.folded, fl, dim_cap);
  Character out;
  out.highest = lambda;
  out.total = ch.total;
  for (const auto& [mu, m] : ch.mults) out.mults[f.from_folded_weight(mu)] = m;
  return out;
}

TorusElement phi(const FoldedDatum& f, const TorusElement& t) {
  TorusElement out;
  out.z.assign(f.orbits.size(), 1.0);
  for (int i = 0; i < f.source.rank(); ++i) out.z[f.orbit_of[i]] *= t.z[i];
  return out;
}

JantzenReport verify_jantzen(const TwiningCharacter& tw, const Character& folded_ch,
                             const RootDatum& source) {
  // Compare over the union of both supports; the folded support must coincide
  // with the weights of nonzero trace.
  Character probe;  // sorted via sorted_support on the union
  probe.highest = tw.lambda;
  for (const auto& [mu, _] : tw.entries) probe.mults[mu] = 1;
  for (const auto& [mu, _] : folded_ch.mults) probe.mults[mu] = 1;

  JantzenReport rep;
  rep.ok = true;
  for (const Weight& mu : sorted_support(source, probe)) {
    JantzenRow row;
    row.mu = mu;
    auto it = tw.entries.find(mu);
    row.trace = it == tw.entries.end() ? Int(0) : it->second;
    auto jt = folded_ch.mults.find(mu);
    row.folded_dim = jt == folded_ch.mults.end() ? Int(0) : jt->second;
    row.ok = row.trace == row.folded_dim;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

double corollary_error(const FoldedDatum& f, const TwiningCharacter& tw,
                       const Character& folded_ch, const TorusElement& t) {
  std::complex<double> lhs = 0.0;
  for (const auto& [mu, trace] : tw.entries)
    lhs += weight_eval(t, mu) * static_cast<double>(trace.convert_to<long long>());
  TorusElement ft = phi(f, t);
  std::complex<double> rhs = 0.0;
  for (const auto& [mu, m] : folded_ch.mults)
    rhs += weight_eval(ft, f.to_folded_weight(mu)) * static_cast<double>(m.convert_to<long long>());
  return std::abs(lhs - rhs);
}

TorusElement random_unit_torus(int rank, std::mt19937_64& rng) {
  TorusElement t;
  t.z.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    // Angle from the top 53 bits keeps the stream implementation-independent.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double theta = 2.0 * std::numbers::pi * u;
    t.z.emplace_back(std::cos(theta), std::sin(theta));
  }
  return t;
}

CorollaryReport verify_corollary(const FoldedDatum& f, const TwiningCharacter& tw,
                                 const Character& folded_ch, int samples, double tol,
                                 unsigned long long seed) {
  CorollaryReport rep;
  rep.tol = tol;
  rep.ok = true;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    TorusElement t = random_unit_torus(f.source.rank(), rng);
    CorollarySample sample;
    sample.error = corollary_error(f, tw, folded_ch, t);
    sample.ok = sample.error < tol;
    rep.ok = rep.ok && sample.ok;
    rep.samples.push_back(sample);
  }
  return rep;
}

VerifiedCase verify_case(const RootDatum& d, const DiagramAutomorphism& sigma,
                         const Weight& lambda, long long dim_cap, int torus_samples, double tol,
                         unsigned long long seed) {
  if (!preserves_cartan(d, sigma))
    throw std::invalid_argument("sigma does not preserve the Cartan matrix");
  if (!is_sigma_invariant(sigma, lambda))
    throw std::invalid_argument("highest weight is not sigma-invariant");
  if (!d.dominant(lambda)) throw std::invalid_argument("highest weight is not dominant");

  VerifiedCase out{fold(d, sigma),
                   std::make_shared<HWModule>(d, lambda, dim_cap),
                   {},
                   {},
                   {},
                   {}};
  out.twining = twining_character(*out.module, sigma);
  out.folded_ch = folded_character(out.folded, lambda, dim_cap);
  out.jantzen = verify_jantzen(out.twining, out.folded_ch, d);
  out.corollary = verify_corollary(out.folded, out.twining, out.folded_ch, torus_samples, tol, seed);
  return out;
}

}  // namespace foldedchar
