#include <doctest.h>

#include <stdexcept>

#include "sgrank/perm.hpp"

using namespace sgrank;

TEST_CASE("composition applies the left factor first") {
  Permutation a(std::vector<uint8_t>{1, 2, 0});  // [2,3,1]
  Permutation b(std::vector<uint8_t>{1, 0, 2});  // [2,1,3]
  CHECK(perm_compose(a, b) == Permutation(std::vector<uint8_t>{0, 2, 1}));  // [1,3,2]
  CHECK(perm_compose(a, b).to_string() == "[1,3,2]");
  // i(ab) = (ia)b pointwise
  for (uint8_t i = 0; i < 3; ++i) CHECK(perm_compose(a, b).apply(i) == b.apply(a.apply(i)));
}

TEST_CASE("identity and inverse") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.to_string() == "[1,2,3,4]");
  Permutation a(std::vector<uint8_t>{2, 0, 3, 1});
  CHECK(perm_compose(a, a.inverse()).is_identity());
  CHECK(perm_compose(a.inverse(), a).is_identity());
}

TEST_CASE("parsing accepts image lists and cycle forms") {
  CHECK(Permutation::parse("[2,3,1]", 3) == Permutation(std::vector<uint8_t>{1, 2, 0}));
  CHECK(Permutation::parse("(1 2 3)", 3) == Permutation::parse("[2,3,1]", 3));
  CHECK(Permutation::parse("(1 2)", 3) == Permutation(std::vector<uint8_t>{1, 0, 2}));
  CHECK(Permutation::parse("(1 2)(3 4)", 4) ==
        Permutation(std::vector<uint8_t>{1, 0, 3, 2}));
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("[1,2,3]", 3).is_identity());
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse("[2,3]", 3), std::invalid_argument);       // wrong degree
  CHECK_THROWS_AS(Permutation::parse("[1,1,3]", 3), std::invalid_argument);     // repeat
  CHECK_THROWS_AS(Permutation::parse("[1,2,4]", 3), std::invalid_argument);     // out of range
  CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), std::invalid_argument);       // out of range
  CHECK_THROWS_AS(Permutation::parse("(1 1)", 3), std::invalid_argument);       // repeat in cycle
  CHECK_THROWS_AS(Permutation::parse("nonsense", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<uint8_t>{0, 0}), std::invalid_argument);
}

TEST_CASE("lexicographic rank matches enumeration order") {
  CHECK(Permutation(3).lex_rank() == 0);
  CHECK(Permutation(std::vector<uint8_t>{1, 0}).lex_rank() == 1);
  std::vector<Permutation> all = all_permutations(3);
  REQUIRE(all.size() == 6);
  for (uint64_t r = 0; r < all.size(); ++r) CHECK(all[r].lex_rank() == r);
  // strictly ascending in the image order
  for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
  CHECK(all[2] == Permutation(std::vector<uint8_t>{1, 0, 2}));  // [2,1,3]
}

TEST_CASE("factorial small values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
}
