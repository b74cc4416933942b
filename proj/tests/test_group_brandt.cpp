#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sgrank/brandt.hpp"
#include "sgrank/group.hpp"
#include "sgrank/semigroup.hpp"

using namespace sgrank;

TEST_CASE("symmetric groups have the expected structure") {
  GroupTable s2 = symmetric_group(2);
  CHECK(s2.order() == 2);
  CHECK(s2.identity() == 0);
  CHECK(s2.product(1, 1) == 0);
  CHECK(s2.inverse(1) == 1);
  CHECK(s2.label(0) == "[1,2]");
  CHECK(s2.label(1) == "[2,1]");

  GroupTable s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  // lex order: 0=[1,2,3] 1=[1,3,2] 2=[2,1,3] 3=[2,3,1] 4=[3,1,2] 5=[3,2,1]
  CHECK(s3.label(3) == "[2,3,1]");
  // [2,3,1] then [2,1,3] is [1,3,2]
  CHECK(s3.product(3, 2) == 1);
  CHECK(s3.inverse(3) == 4);
  CHECK(s3.inverse(4) == 3);
  for (uint32_t a = 0; a < 6; ++a) {
    CHECK(s3.product(a, s3.inverse(a)) == 0);
    CHECK(s3.product(0, a) == a);
    CHECK(s3.product(a, 0) == a);
  }
  CHECK(symmetric_group(4).order() == 24);
  CHECK_THROWS_AS(symmetric_group(0), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_group(6), std::invalid_argument);
}

TEST_CASE("group element lists match permutation lexicographic order") {
  std::vector<Permutation> els = symmetric_group_elements(3);
  REQUIRE(els.size() == 6);
  for (uint32_t r = 0; r < 6; ++r) CHECK(els[r].lex_rank() == r);
}

TEST_CASE("generates tests subgroup saturation") {
  GroupTable s3 = symmetric_group(3);
  CHECK(s3.generates({2, 3}));     // a transposition and a 3-cycle
  CHECK(s3.generates({1, 2}));     // two transpositions
  CHECK(!s3.generates({2}));       // one transposition only reaches {e, (12)}
  CHECK(!s3.generates({0}));
  CHECK(!s3.generates({}));
  GroupTable t = trivial_group();
  CHECK(t.order() == 1);
  CHECK(t.generates({0}));
  CHECK(!t.generates({}));
}

TEST_CASE("group table constructor rejects non-groups") {
  // Two-element right-zero semigroup: associative but no identity.
  CHECK_THROWS_AS(GroupTable({0, 1, 0, 1}, {"a", "b"}), std::invalid_argument);
  // Non-associative table.
  CHECK_THROWS_AS(GroupTable({1, 0, 0, 0}, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable({}, {}), std::invalid_argument);
}

TEST_CASE("products of triples compose when inner indices match") {
  GroupTable s2 = symmetric_group(2);
  BrandtElement x = BrandtElement::make(0, 1, 1);
  BrandtElement y = BrandtElement::make(1, 1, 0);
  BrandtElement z = BrandtElement::make(0, 1, 0);
  BrandtElement th = BrandtElement::make_theta();

  BrandtElement xy = brandt_product(s2, 2, x, y);
  CHECK(!xy.theta);
  CHECK(xy.i == 0);
  CHECK(xy.g == 0);  // swap * swap = identity
  CHECK(xy.j == 0);

  CHECK(brandt_product(s2, 2, x, z).theta);  // inner mismatch: 1 != 0
  CHECK(brandt_product(s2, 2, th, x).theta);
  CHECK(brandt_product(s2, 2, x, th).theta);
  CHECK(brandt_product(s2, 2, th, th).theta);
  CHECK_THROWS_AS(brandt_product(s2, 2, BrandtElement::make(2, 0, 0), y),
                  std::out_of_range);
}

TEST_CASE("triple indexing puts theta first then lexicographic order") {
  GroupTable s2 = symmetric_group(2);
  CHECK(brandt_index(s2, 2, BrandtElement::make_theta()) == 0);
  uint32_t expect = 1;
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t g = 0; g < 2; ++g)
      for (uint32_t j = 0; j < 2; ++j)
        CHECK(brandt_index(s2, 2, BrandtElement::make(i, g, j)) == expect++);
  CHECK(expect == 9);
}

TEST_CASE("the full table over the two-element group and two rows has nine elements") {
  GroupTable s2 = symmetric_group(2);
  FiniteSemigroup b = build_brandt(s2, 2);
  REQUIRE(b.size() == 9);
  CHECK(b.label(0) == "theta");
  CHECK(b.label(brandt_index(s2, 2, BrandtElement::make(0, 1, 1))) == "(1,[2,1],2)");
  // Table entries agree with the symbolic product everywhere.
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t c = 0; c < 9; ++c) {
      auto unrank = [&](uint32_t idx) {
        if (idx == 0) return BrandtElement::make_theta();
        uint32_t t = idx - 1;
        return BrandtElement::make(t / 4, (t / 2) % 2, t % 2);
      };
      BrandtElement prod = brandt_product(s2, 2, unrank(a), unrank(c));
      CHECK(b.product(a, c) == brandt_index(s2, 2, prod));
    }
}

TEST_CASE("classical generating pairs for the trivial-group case") {
  GroupTable t = trivial_group();
  std::vector<BrandtElement> gens = garba_generating_set(t, {0}, 2);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == BrandtElement::make(0, 0, 1));
  CHECK(gens[1] == BrandtElement::make(1, 0, 0));
  FiniteSemigroup b = build_brandt(t, 2);
  CHECK(brandt_label(t, 2, gens[0]) == "(1,e,2)");
  CHECK(brandt_label(t, 2, gens[1]) == "(2,e,1)");
  ElementSet u = b.empty_set();
  for (const BrandtElement& x : gens) u.insert(brandt_index(t, 2, x));
  CHECK(is_generating(b, u));
}

TEST_CASE("classical generating sets have size r plus n minus one") {
  GroupTable s2 = symmetric_group(2);
  std::vector<BrandtElement> g22 = garba_generating_set(s2, {1}, 2);
  CHECK(g22.size() == 2);  // r=1, n=2
  FiniteSemigroup b22 = build_brandt(s2, 2);
  ElementSet u22 = b22.empty_set();
  for (const BrandtElement& x : g22) u22.insert(brandt_index(s2, 2, x));
  CHECK(is_generating(b22, u22));

  GroupTable s3 = symmetric_group(3);
  std::vector<BrandtElement> g33 = garba_generating_set(s3, {2, 3}, 3);
  CHECK(g33.size() == 4);  // r=2, n=3
  FiniteSemigroup b33 = build_brandt(s3, 3);
  ElementSet u33 = b33.empty_set();
  for (const BrandtElement& x : g33) u33.insert(brandt_index(s3, 3, x));
  CHECK(is_generating(b33, u33));
  CHECK(is_independent(b33, u33));
}

TEST_CASE("classical construction rejects bad input") {
  GroupTable s3 = symmetric_group(3);
  CHECK_THROWS_AS(garba_generating_set(s3, {2, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(garba_generating_set(s3, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(garba_generating_set(s3, {2}, 2), std::invalid_argument);  // not generating
}

TEST_CASE("oversized tables are refused with the size in the message") {
  GroupTable s5 = symmetric_group(5);
  CHECK_THROWS_AS(build_brandt(s5, 2), std::invalid_argument);  // 481 > 385
  CHECK(build_brandt(symmetric_group(4), 4).size() == 385);     // boundary allowed
  CHECK_THROWS_AS(build_brandt(s5, 0), std::invalid_argument);
}
