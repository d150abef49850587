#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "foldedchar/hwmodule.hpp"

using namespace foldedchar;

namespace {
Weight wt(std::vector<long long> c) { return Weight(std::move(c)); }
}  // namespace

TEST_CASE("e_action recursion") {
  RootDatum a1 = make_datum("A1");
  FormCalculator calc(a1, wt({2}));
  // e_1 (f_1 eta) = <coroot_1, lambda> eta = 2 eta
  CHECK(calc.e_action(0, Word{0}) == Combo{{Word{}, 2}});
  // e_1 eta = 0
  CHECK(calc.e_action(0, Word{}).empty());

  RootDatum a2 = make_datum("A2");
  FormCalculator calc2(a2, wt({1, 0}));
  CHECK(calc2.e_action(1, Word{0}).empty());

  // Linearity on combinations.
  Combo v{{Word{0}, 3}};
  CHECK(calc.e_action(0, v) == Combo{{Word{}, 6}});
}

TEST_CASE("contravariant form") {
  RootDatum a1 = make_datum("A1");
  FormCalculator calc(a1, wt({2}));
  CHECK(calc.form(Word{}, Word{}) == 1);
  CHECK(calc.form(Word{0}, Word{0}) == 2);
  CHECK(calc.form(Word{0, 0}, Word{0, 0}) == 4);  // e f^2 eta = 2 f eta
  CHECK(calc.form(Word{}, Word{0}) == 0);         // mismatched weights

  RootDatum a2 = make_datum("A2");
  FormCalculator c2(a2, wt({1, 1}));
  CHECK(c2.form(Word{0, 1}, Word{1, 0}) == 1);
  CHECK(c2.form(Word{0, 1}, Word{0, 1}) == 2);
  // Symmetry.
  CHECK(c2.form(Word{1, 0}, Word{0, 1}) == c2.form(Word{0, 1}, Word{1, 0}));
}

TEST_CASE("build_module sl2") {
  RootDatum a1 = make_datum("A1");
  HWModule mod(a1, wt({2}));
  CHECK(mod.dimension() == 3);
  CHECK(mod.dim_at(wt({2})) == 1);
  CHECK(mod.dim_at(wt({0})) == 1);
  CHECK(mod.dim_at(wt({-2})) == 1);
  CHECK(mod.dim_at(wt({1})) == 0);
}

TEST_CASE("build_module adjoint A2") {
  RootDatum a2 = make_datum("A2");
  HWModule mod(a2, wt({1, 1}));
  CHECK(mod.dimension() == 8);
  CHECK(mod.dim_at(wt({0, 0})) == 2);
}

TEST_CASE("trivial module") {
  RootDatum d4 = make_datum("D4");
  HWModule mod(d4, wt({0, 0, 0, 0}));
  CHECK(mod.dimension() == 1);
  CHECK(mod.dim_at(wt({0, 0, 0, 0})) == 1);
}

TEST_CASE("module dimensions match Freudenthal per weight") {
  const std::vector<std::pair<const char*, std::vector<long long>>> cases = {
      {"A2", {2, 2}}, {"A3", {1, 0, 1}}, {"A3", {0, 1, 0}}, {"D4", {0, 1, 0, 0}}};
  for (const auto& [label, coords] : cases) {
    RootDatum d = make_datum(label);
    Weight lambda(coords);
    HWModule mod(d, lambda);
    Character ch = freudenthal(d, lambda);
    CHECK(mod.weight_spaces().size() == ch.mults.size());
    for (const auto& [mu, m] : ch.mults) CHECK(Int(mod.dim_at(mu)) == m);
    CHECK(mod.dimension() == weyl_dimension(d, lambda));
  }
}

TEST_CASE("sigma_trace on the A2 adjoint") {
  RootDatum a2 = make_datum("A2");
  DiagramAutomorphism s = parse_cycles("(1 2)", 2);
  HWModule mod(a2, wt({1, 1}));
  CHECK(mod.sigma_trace(s, wt({1, 1})) == 1);    // sigma(eta) = eta
  CHECK(mod.sigma_trace(s, wt({0, 0})) == 0);    // 2-dim zero weight space
  CHECK(mod.sigma_trace(s, wt({-1, -1})) == 1);  // monomial action convention

  CHECK_THROWS_AS(mod.sigma_trace(s, wt({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(mod.sigma_trace(s, wt({5, 5})), std::invalid_argument);
}

TEST_CASE("trace bounds and identity action") {
  RootDatum a3 = make_datum("A3");
  DiagramAutomorphism s = parse_cycles("(1 3)", 3);
  HWModule mod(a3, wt({1, 0, 1}));
  for (const auto& [mu, space] : mod.weight_spaces()) {
    if (!is_sigma_invariant(s, mu)) continue;
    Int tr = mod.sigma_trace(s, mu);
    CHECK(abs(tr) <= Int(space.basis.size()));
  }
  // Identity automorphism acts as the identity on every weight space.
  DiagramAutomorphism id = identity_automorphism(3);
  for (const auto& [mu, space] : mod.weight_spaces())
    CHECK(mod.sigma_trace(id, mu) == Int(space.basis.size()));
}

TEST_CASE("form sigma invariance") {
  RootDatum a3 = make_datum("A3");
  CHECK(form_sigma_invariance_check(a3, wt({0, 1, 0}), parse_cycles("(1 3)", 3), 100, 1));
  CHECK(form_sigma_invariance_check(a3, wt({1, 0, 1}), identity_automorphism(3), 50, 2));
}

TEST_CASE("cap enforcement") {
  RootDatum a2 = make_datum("A2");
  CHECK_THROWS_AS(HWModule(a2, wt({10, 10}), 100), std::runtime_error);
}

TEST_CASE("word_weight") {
  RootDatum a2 = make_datum("A2");
  CHECK(word_weight(a2, wt({1, 1}), Word{}) == wt({1, 1}));
  CHECK(word_weight(a2, wt({1, 1}), Word{0, 1}) == wt({0, 0}));
}
