#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldedchar/folding.hpp"

using namespace foldedchar;

namespace {
Weight wt(std::vector<long long> c) { return Weight(std::move(c)); }
}  // namespace

TEST_CASE("cycle notation parser") {
  DiagramAutomorphism s = parse_cycles("(1 3)(2 4)", 4);
  CHECK(s.perm == std::vector<int>{2, 3, 0, 1});
  CHECK(s.order == 2);

  DiagramAutomorphism t = parse_cycles("(1 3 4)", 4);
  CHECK(t.perm == std::vector<int>{2, 1, 3, 0});
  CHECK(t.order == 3);

  CHECK(parse_cycles("", 3).is_identity());
  CHECK(parse_cycles("  ", 3).is_identity());

  CHECK_THROWS_AS(parse_cycles("(1 3", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(2)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1 2", 4), std::invalid_argument);
}

TEST_CASE("sigma orbits") {
  RootDatum a3 = make_datum("A3");
  auto orbits = sigma_orbits(a3, parse_cycles("(1 3)", 3));
  CHECK(orbits == std::vector<std::vector<int>>{{0, 2}, {1}});

  RootDatum d4 = make_datum("D4");
  CHECK(sigma_orbits(d4, parse_cycles("(1 3 4)", 4)) ==
        std::vector<std::vector<int>>{{0, 2, 3}, {1}});

  CHECK(sigma_orbits(a3, identity_automorphism(3)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});

  // (1 2) does not preserve the A3 Cartan matrix.
  CHECK_THROWS_AS(sigma_orbits(a3, parse_cycles("(1 2)", 3)), std::invalid_argument);
}

TEST_CASE("orbit_h") {
  RootDatum a3 = make_datum("A3");
  CHECK(orbit_h(a3, {0, 2}) == 0);  // alpha_1 + alpha_3 is not a root
  CHECK(orbit_h(a3, {1}) == 0);
  RootDatum a2 = make_datum("A2");
  CHECK(orbit_h(a2, {0, 1}) == 1);  // alpha_1 + alpha_2 is a root
}

TEST_CASE("fold A3 to C2") {
  RootDatum a3 = make_datum("A3");
  FoldedDatum f = fold(a3, parse_cycles("(1 3)", 3));
  CHECK(f.folded.cartan_matrix() == std::vector<std::vector<long long>>{{2, -1}, {-2, 2}});
  CHECK(f.folded.type_label() == "C2");
  CHECK(f.h_values == std::vector<int>{0, 0});
  CHECK(f.alpha_orbit[0] == wt({2, -2, 2}));
}

TEST_CASE("fold D4 order 3 to G2") {
  FoldedDatum f = fold(make_datum("D4"), parse_cycles("(1 3 4)", 4));
  CHECK(f.folded.cartan_matrix() == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
  CHECK(f.folded.type_label() == "G2");
}

TEST_CASE("fold A4 with the doubled root") {
  FoldedDatum f = fold(make_datum("A4"), parse_cycles("(1 4)(2 3)", 4));
  REQUIRE(f.orbits.size() == 2);
  CHECK(f.h_values == std::vector<int>{0, 1});
  // alpha_{2,3} = 2 (alpha_2 + alpha_3)
  RootDatum a4 = make_datum("A4");
  CHECK(f.alpha_orbit[1] == 2LL * (a4.simple_root(1) + a4.simple_root(2)));
  CHECK(f.folded.cartan_matrix() == std::vector<std::vector<long long>>{{2, -2}, {-1, 2}});
}

TEST_CASE("folding type table") {
  const std::vector<std::tuple<const char*, const char*, const char*>> table = {
      {"A2", "(1 2)", "A1"},      {"A3", "(1 3)", "C2"},       {"A4", "(1 4)(2 3)", "C2"},
      {"A5", "(1 5)(2 4)", "C3"}, {"D4", "(3 4)", "B3"},       {"D5", "(4 5)", "B4"},
      {"D4", "(1 3 4)", "G2"},    {"E6", "(1 6)(3 5)", "F4"}};
  for (const auto& [type, sigma, expected] : table) {
    RootDatum d = make_datum(type);
    FoldedDatum f = fold(d, parse_cycles(sigma, d.rank()));
    CHECK_MESSAGE(f.folded.type_label() == expected, type, "/", sigma);
    // <coroot_O, alpha_O> = 2 for every orbit.
    for (std::size_t o = 0; o < f.orbits.size(); ++o) CHECK(f.folded.cartan(o, o) == 2);
    // to_folded_weight carries alpha_O to the O-th folded simple root.
    for (std::size_t o = 0; o < f.orbits.size(); ++o)
      CHECK(f.to_folded_weight(f.alpha_orbit[o]) == f.folded.simple_root(static_cast<int>(o)));
  }
}

TEST_CASE("fold rejections") {
  RootDatum e7 = make_datum("E7");
  CHECK_THROWS_AS(fold(e7, identity_automorphism(7)), std::invalid_argument);
  CHECK_THROWS_AS(fold(e7, parse_cycles("(1 2)", 7)), std::invalid_argument);
  // Non-simply-laced source.
  RootDatum c2 = make_datum("C2");
  CHECK_THROWS_AS(fold(c2, identity_automorphism(2)), std::invalid_argument);
}

TEST_CASE("sigma-invariant weights and the folded coordinate map") {
  RootDatum a3 = make_datum("A3");
  DiagramAutomorphism s = parse_cycles("(1 3)", 3);
  CHECK(is_sigma_invariant(s, wt({1, 0, 1})));
  CHECK_FALSE(is_sigma_invariant(s, wt({1, 0, 0})));

  FoldedDatum f = fold(a3, s);
  CHECK(f.to_folded_weight(wt({0, 1, 0})) == wt({0, 1}));
  CHECK(f.to_folded_weight(wt({0, 0, 0})) == wt({0, 0}));
  CHECK(f.from_folded_weight(wt({0, 1})) == wt({0, 1, 0}));
  CHECK_THROWS_AS(f.to_folded_weight(wt({1, 0, 0})), std::invalid_argument);

  FoldedDatum g = fold(make_datum("D4"), parse_cycles("(1 3 4)", 4));
  CHECK(g.to_folded_weight(wt({0, 1, 0, 0})) == wt({0, 1}));

  // Round trip is the identity on folded coordinates.
  CHECK(g.to_folded_weight(g.from_folded_weight(wt({2, -3}))) == wt({2, -3}));
}

TEST_CASE("coweight projection sums over orbits") {
  FoldedDatum f = fold(make_datum("A3"), parse_cycles("(1 3)", 3));
  CHECK(f.project_coweight(Coweight({1, 0, 0})) == Coweight({1, 0}));
  CHECK(f.project_coweight(Coweight({1, 2, 3})) == Coweight({4, 2}));
}

TEST_CASE("dominant_invariant_check") {
  FoldedDatum f = fold(make_datum("A3"), parse_cycles("(1 3)", 3));
  CHECK(dominant_invariant_check(f, wt({1, 0, 1})));
  CHECK_FALSE(dominant_invariant_check(f, wt({1, 0, 0})));
  CHECK_FALSE(dominant_invariant_check(f, wt({-1, 0, -1})));

  FoldedDatum g = fold(make_datum("A2"), parse_cycles("(1 2)", 2));
  CHECK(dominant_invariant_check(g, wt({1, 1})));

  // Equivalent to all folded coordinates being non-negative.
  for (long long x : {-2LL, 0LL, 1LL})
    for (long long y : {-1LL, 0LL, 3LL}) {
      Weight mu = f.from_folded_weight(wt({x, y}));
      CHECK(dominant_invariant_check(f, mu) == (x >= 0 && y >= 0));
    }
}
