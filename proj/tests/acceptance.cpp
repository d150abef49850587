// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "foldedchar/report.hpp"

using namespace foldedchar;

namespace {

struct BuiltCase {
  CaseSpec spec;
  RootDatum datum;
  DiagramAutomorphism sigma;
  Weight lambda;
  VerifiedCase result;
};

std::vector<BuiltCase> build_catalog() {
  std::vector<BuiltCase> out;
  for (const CaseSpec& spec : default_catalog()) {
    RootDatum d = make_datum(spec.type);
    DiagramAutomorphism sigma = parse_cycles(spec.sigma, d.rank());
    Weight lambda = parse_weight(spec.lambda, d.rank());
    VerifiedCase result = verify_case(d, sigma, lambda, 2000, 10, 1e-8, 0);
    out.push_back({spec, std::move(d), std::move(sigma), std::move(lambda), std::move(result)});
  }
  return out;
}

// 1. Twining traces equal folded multiplicities, exactly, at every invariant weight.
bool criterion_twining_exact(const std::vector<BuiltCase>& cases) {
  for (const BuiltCase& c : cases) {
    if (!c.result.jantzen.ok) return false;
    for (const JantzenRow& row : c.result.jantzen.rows)
      if (!row.ok || row.trace != row.folded_dim) return false;
  }
  return true;
}

// 2. Trace of t*sigma matches the folded character at phi(t) for 10 seeded
// unit-modulus torus elements per case, within 1e-8.
bool criterion_corollary(const std::vector<BuiltCase>& cases) {
  for (const BuiltCase& c : cases) {
    if (!c.result.corollary.ok || c.result.corollary.samples.size() != 10) return false;
    for (const CorollarySample& s : c.result.corollary.samples)
      if (!s.ok || !(s.error < 1e-8)) return false;
  }
  return true;
}

// 3. Folded type table, with h and alpha_O recomputed from scratch.
bool criterion_fold_table(const std::vector<BuiltCase>&) {
  const std::vector<std::tuple<std::string, std::string, std::string>> table = {
      {"A2", "(1 2)", "A1"},      {"A3", "(1 3)", "C2"},       {"A4", "(1 4)(2 3)", "C2"},
      {"A5", "(1 5)(2 4)", "C3"}, {"D4", "(3 4)", "B3"},       {"D5", "(4 5)", "B4"},
      {"D4", "(1 3 4)", "G2"},    {"E6", "(1 6)(3 5)", "F4"}};
  for (const auto& [type, cycles, expected] : table) {
    RootDatum d = make_datum(type);
    FoldedDatum f = fold(d, parse_cycles(cycles, d.rank()));
    if (classify_type(f.folded.cartan_matrix()) != expected) return false;

    auto roots = positive_roots(d);
    auto is_root = [&](const Weight& w) {
      return std::any_of(roots.begin(), roots.end(),
                         [&](const PosRoot& r) { return r.root == w; });
    };
    for (std::size_t o = 0; o < f.orbits.size(); ++o) {
      const auto& orbit = f.orbits[o];
      // h = number of unordered pairs inside the orbit summing to a root.
      int h = 0;
      for (std::size_t a = 0; a < orbit.size(); ++a)
        for (std::size_t b = a + 1; b < orbit.size(); ++b)
          if (is_root(d.simple_root(orbit[a]) + d.simple_root(orbit[b]))) ++h;
      if (h != f.h_values[o]) return false;

      Weight sum(std::vector<long long>(d.rank(), 0));
      for (int i : orbit) sum = sum + d.simple_root(i);
      if (f.alpha_orbit[o] != (1LL << h) * sum) return false;
    }
  }
  // The doubled root occurs exactly in the two odd-rank A foldings.
  if (fold(make_datum("A2"), parse_cycles("(1 2)", 2)).h_values != std::vector<int>{1})
    return false;
  if (fold(make_datum("A4"), parse_cycles("(1 4)(2 3)", 4)).h_values != std::vector<int>{0, 1})
    return false;
  return true;
}

// 4. Explicit module, Freudenthal, and the Weyl dimension formula agree.
bool criterion_oracles(const std::vector<BuiltCase>& cases) {
  for (const BuiltCase& c : cases) {
    const HWModule& mod = *c.result.module;
    Character ch = freudenthal(c.datum, c.lambda);
    if (mod.weight_spaces().size() != ch.mults.size()) return false;
    for (const auto& [mu, m] : ch.mults)
      if (Int(mod.dim_at(mu)) != m) return false;
    if (Int(mod.dimension()) != weyl_dimension(c.datum, c.lambda)) return false;
    if (ch.total != weyl_dimension(c.datum, c.lambda)) return false;
  }
  return true;
}

// 5. Form invariance under sigma, trace 1 at the top, and the mod-r congruence
// away from the doubled-root foldings.
bool criterion_structure(const std::vector<BuiltCase>& cases) {
  for (const BuiltCase& c : cases) {
    const HWModule& mod = *c.result.module;
    if (!form_sigma_invariance_check(mod, c.sigma, 100, 0)) return false;
    if (c.result.twining.entries.at(c.lambda) != 1) return false;

    bool doubled =
        std::any_of(c.result.folded.h_values.begin(), c.result.folded.h_values.end(),
                    [](int h) { return h > 0; });
    if (doubled) continue;
    const long long r = c.sigma.order;
    for (const auto& [mu, tr] : c.result.twining.entries)
      if ((Int(mod.dim_at(mu)) - tr) % r != 0) return false;
  }
  return true;
}

// 6. Byte-identical JSON for two independent seeded catalog runs.
bool criterion_determinism() {
  auto run = [] {
    std::vector<std::pair<CaseSpec, VerifiedCase>> results;
    for (const CaseSpec& spec : default_catalog()) {
      RootDatum d = make_datum(spec.type);
      DiagramAutomorphism sigma = parse_cycles(spec.sigma, d.rank());
      Weight lambda = parse_weight(spec.lambda, d.rank());
      results.emplace_back(spec, verify_case(d, sigma, lambda, 2000, 10, 1e-8, 0));
    }
    return catalog_report_json(results).dump(2);
  };
  return run() == run();
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char* name, bool ok) {
    std::printf("criterion %d (%s): %s\n", n, name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
  };

  std::vector<BuiltCase> cases;
  try {
    cases = build_catalog();
  } catch (const std::exception& e) {
    std::printf("catalog construction failed: %s\n", e.what());
    return 1;
  }

  report(1, "exact twining vs folded character", criterion_twining_exact(cases));
  report(2, "torus corollary within 1e-8", criterion_corollary(cases));
  report(3, "folding type table", criterion_fold_table(cases));
  report(4, "module/Freudenthal/Weyl agreement", criterion_oracles(cases));
  report(5, "structural invariants", criterion_structure(cases));
  report(6, "deterministic JSON reports", criterion_determinism());

  return failures == 0 ? 0 : 1;
}
