#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgrank/affine.hpp"
#include "sgrank/brandt.hpp"
#include "sgrank/group.hpp"
#include "sgrank/ranks.hpp"
#include "sgrank/semigroup.hpp"

using namespace sgrank;

namespace {

FiniteSemigroup aplus2() { return build_cayley(enumerate_aplus(2)); }

FiniteSemigroup right_zero(uint32_t m) {
  std::vector<uint32_t> table(size_t(m) * m);
  std::vector<std::string> labels(m);
  for (uint32_t a = 0; a < m; ++a) {
    labels[a] = "z" + std::to_string(a + 1);
    for (uint32_t b = 0; b < m; ++b) table[size_t(a) * m + b] = b;
  }
  return FiniteSemigroup(std::move(table), std::move(labels));
}

// A group viewed as a semigroup by full table.
FiniteSemigroup group_as_semigroup(const GroupTable& g) {
  const uint32_t m = g.order();
  std::vector<uint32_t> table(size_t(m) * m);
  std::vector<std::string> labels(m);
  for (uint32_t a = 0; a < m; ++a) {
    labels[a] = g.label(a);
    for (uint32_t b = 0; b < m; ++b) table[size_t(a) * m + b] = g.product(a, b);
  }
  return FiniteSemigroup(std::move(table), std::move(labels));
}

SearchBudget quick_budget(uint32_t parallelism = 1) {
  SearchBudget b;
  b.time_limit = std::chrono::milliseconds(120000);
  b.parallelism = parallelism;
  return b;
}

bool reports_equal_modulo_time(const RankReport& a, const RankReport& b) {
  if (a.rank != b.rank || a.value != b.value || a.status != b.status ||
      a.method != b.method || a.details != b.details)
    return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness && (a.witness->elements != b.witness->elements ||
                    a.witness->labels != b.witness->labels ||
                    a.witness->kind != b.witness->kind))
    return false;
  return true;
}

}  // namespace

TEST_CASE("a non-band has smallest rank one, certified without search") {
  RankReport r = small_rank(aplus2());
  CHECK(r.value == 1);
  CHECK(r.status == RankStatus::exact);
  CHECK(r.method == RankMethod::theorem_certified);
  CHECK(r.details.find("not a band") != std::string::npos);
}

TEST_CASE("bands fall back to a subset scan for the smallest rank") {
  // Meet semilattice a > c < b: {a,b,c} is the first dependent subset.
  FiniteSemigroup sl({0, 2, 2, 2, 1, 2, 2, 2, 2}, {"a", "b", "c"});
  RankReport r = small_rank(sl);
  CHECK(r.value == 2);
  CHECK(r.method == RankMethod::search);
  CHECK(r.details.find("size 3") != std::string::npos);

  // Right-zero band: every subset is independent, so the rank is the size.
  RankReport rz = small_rank(right_zero(4));
  CHECK(rz.value == 4);
  CHECK(rz.details == "every subset is independent");

  // The degree-1 catalog is a three-element band with no dependent subset.
  RankReport r1 = small_rank(build_cayley(enumerate_aplus(1)));
  CHECK(r1.value == 3);
  CHECK(r1.status == RankStatus::exact);
}

TEST_CASE("minimum generating sets match brute force on small tables") {
  FiniteSemigroup b2 = build_brandt(trivial_group(), 2);
  RankReport r = lower_rank(b2, quick_budget());
  std::optional<ElementSet> brute = test_oracle::brute_minimum_generating(b2, b2.size());
  REQUIRE(r.status == RankStatus::exact);
  REQUIRE(brute.has_value());
  CHECK(r.value == brute->count());
  CHECK(r.witness->elements == brute->members());

  FiniteSemigroup bs22 = build_brandt(symmetric_group(2), 2);
  RankReport r2 = lower_rank(bs22, quick_budget());
  CHECK(r2.value == 2);
  CHECK(r2.status == RankStatus::exact);
  REQUIRE(r2.witness.has_value());
  CHECK(r2.witness->labels == std::vector<std::string>{"(1,[1,2],2)", "(2,[2,1],1)"});
  std::optional<ElementSet> brute2 = test_oracle::brute_minimum_generating(bs22, 3);
  CHECK(r2.witness->elements == brute2->members());
}

TEST_CASE("the full degree-2 catalog needs four generators") {
  FiniteSemigroup s = aplus2();
  RankReport r = lower_rank(s, quick_budget());
  CHECK(r.value == 4);
  CHECK(r.status == RankStatus::exact);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == WitnessKind::generating_set);
  CHECK(r.witness->labels ==
        std::vector<std::string>{"const:1,1", "ss:(1,1)->(1,1)", "ns:1,2;[1,2]",
                                 "ns:2,1;[2,1]"});
  // The witness is the first generating subset in (size, lex) order.
  std::optional<ElementSet> brute = test_oracle::brute_minimum_generating(s, 4);
  REQUIRE(brute.has_value());
  CHECK(r.witness->elements == brute->members());
}

TEST_CASE("the certified minimum matches the search and extends beyond it") {
  RankReport c2 = certified_lower_rank_aplus(2);
  CHECK(c2.value == 4);
  CHECK(c2.status == RankStatus::exact);
  CHECK(c2.method == RankMethod::theorem_certified);
  REQUIRE(c2.witness.has_value());
  CHECK(c2.witness->elements.size() == 4);
  CHECK(is_generating(aplus2(), aplus2().set_of(c2.witness->elements)));

  RankReport c3 = certified_lower_rank_aplus(3);
  CHECK(c3.value == 6);
  CHECK(c3.status == RankStatus::exact);
  CHECK(c3.method == RankMethod::theorem_certified);
  REQUIRE(c3.witness.has_value());
  CHECK(c3.witness->elements.size() == 6);

  RankReport c4 = certified_lower_rank_aplus(4);
  CHECK(c4.value == 7);
  CHECK(c4.status == RankStatus::formula);
  CHECK(c4.method == RankMethod::formula);
  CHECK(!c4.witness.has_value());

  CHECK(certified_lower_rank_aplus(5).value == 8);
  CHECK_THROWS_AS(certified_lower_rank_aplus(1), std::invalid_argument);
  CHECK_THROWS_AS(certified_lower_rank_aplus(0), std::invalid_argument);
}

TEST_CASE("the smallest prime subset of the degree-2 catalog is a pair") {
  FiniteSemigroup s = aplus2();
  RankReport r = smallest_prime_subset(s, quick_budget());
  CHECK(r.value == 2);
  CHECK(r.status == RankStatus::exact);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == WitnessKind::prime_subset);
  CHECK(r.witness->elements == std::vector<uint32_t>{23, 24});
  CHECK(r.witness->labels == std::vector<std::string>{"ns:1,2;[1,2]", "ns:1,2;[2,1]"});

  // Brute force: no prime singleton, exactly two prime pairs.
  CHECK(test_oracle::brute_prime_subsets(s, 1).empty());
  std::vector<ElementSet> pairs = test_oracle::brute_prime_subsets(s, 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].members() == std::vector<uint32_t>{23, 24});
  CHECK(pairs[1].members() == std::vector<uint32_t>{25, 26});
}

TEST_CASE("the largest rank follows from the prime-subset size") {
  FiniteSemigroup s = aplus2();
  RankReport r = large_rank(s, quick_budget());
  CHECK(r.value == 28);  // 29 - 2 + 1
  CHECK(r.status == RankStatus::exact);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == WitnessKind::prime_subset);
  CHECK(r.witness->elements == std::vector<uint32_t>{23, 24});

  RankReport rb = large_rank(build_brandt(symmetric_group(2), 2), quick_budget());
  CHECK(rb.value == 8);
  CHECK(rb.status == RankStatus::exact);
}

TEST_CASE("every subset of a right-zero band is independent and generating needs all") {
  FiniteSemigroup rz = right_zero(4);
  RankReport indep = independent_set_search(rz, false, quick_budget());
  CHECK(indep.value == 4);
  CHECK(indep.status == RankStatus::exact);
  RankReport gen = independent_set_search(rz, true, quick_budget());
  CHECK(gen.value == 4);
  CHECK(lower_rank(rz, quick_budget()).value == 4);
  // Every singleton is prime, so the largest rank is m - 1 + 1 = m.
  RankReport big = large_rank(rz, quick_budget());
  CHECK(big.value == 4);
  CHECK(big.witness->elements == std::vector<uint32_t>{0});
}

TEST_CASE("maximum independent sets in small symmetric groups") {
  for (auto [n, expect] : {std::pair<uint32_t, int64_t>{2, 1}, {3, 2}, {4, 3}}) {
    FiniteSemigroup g = group_as_semigroup(symmetric_group(n));
    RankReport r3 = independent_set_search(g, true, quick_budget());
    RankReport r4 = independent_set_search(g, false, quick_budget());
    CHECK(r3.value == expect);
    CHECK(r4.value == expect);
    CHECK(r3.status == RankStatus::exact);
    CHECK(r4.status == RankStatus::exact);
  }
}

TEST_CASE("the degree-2 catalog has intermediate ranks five and twelve") {
  FiniteSemigroup s = aplus2();
  RankReport r3 = independent_set_search(s, true, quick_budget());
  CHECK(r3.value == 5);
  CHECK(r3.status == RankStatus::exact);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->labels ==
        std::vector<std::string>{"const:1,1", "ss:(1,1)->(1,1)", "ns:1,1;[2,1]",
                                 "ns:1,2;[1,2]", "ns:2,1;[1,2]"});
  ElementSet w3 = s.set_of(r3.witness->elements);
  CHECK(is_independent(s, w3));
  CHECK(is_generating(s, w3));

  RankReport r4 = independent_set_search(s, false, quick_budget());
  CHECK(r4.value == 12);
  CHECK(r4.status == RankStatus::exact);
  REQUIRE(r4.witness.has_value());
  CHECK(r4.witness->labels ==
        std::vector<std::string>{"const:1,1", "const:1,2", "const:2,1",
                                 "ss:(1,1)->(1,1)", "ss:(1,1)->(2,2)", "ss:(1,2)->(1,2)",
                                 "ss:(1,2)->(2,2)", "ss:(2,1)->(2,1)", "ss:(2,1)->(2,2)",
                                 "ss:(2,2)->(2,2)", "ns:1,1;[1,2]", "ns:2,2;[1,2]"});
  ElementSet w4 = s.set_of(r4.witness->elements);
  CHECK(is_independent(s, w4));
  CHECK(!is_generating(s, w4));
}

TEST_CASE("worker count never changes a report") {
  FiniteSemigroup s = aplus2();
  for (bool gen : {false, true}) {
    RankReport one = independent_set_search(s, gen, quick_budget(1));
    RankReport four = independent_set_search(s, gen, quick_budget(4));
    CHECK(reports_equal_modulo_time(one, four));
  }
  CHECK(reports_equal_modulo_time(lower_rank(s, quick_budget(1)),
                                  lower_rank(s, quick_budget(4))));
  CHECK(reports_equal_modulo_time(smallest_prime_subset(s, quick_budget(1)),
                                  smallest_prime_subset(s, quick_budget(4))));

  // Still true when the node budget truncates the search.
  SearchBudget tight1 = quick_budget(1);
  tight1.node_limit = 500;
  SearchBudget tight4 = quick_budget(4);
  tight4.node_limit = 500;
  CHECK(reports_equal_modulo_time(independent_set_search(s, false, tight1),
                                  independent_set_search(s, false, tight4)));
  CHECK(reports_equal_modulo_time(lower_rank(s, tight1), lower_rank(s, tight4)));
}

TEST_CASE("exhausted budgets degrade to bounds instead of failing") {
  FiniteSemigroup s = aplus2();

  SearchBudget starved = quick_budget();
  starved.node_limit = 10;
  RankReport r2 = lower_rank(s, starved);
  CHECK(r2.status == RankStatus::lower_bound);
  CHECK(r2.value >= 1);
  CHECK(r2.value < 4);
  REQUIRE(r2.witness.has_value());  // the greedy upper-bound witness
  CHECK(is_generating(s, s.set_of(r2.witness->elements)));
  CHECK(r2.details.find("greedy") != std::string::npos);

  SearchBudget instant = quick_budget();
  instant.time_limit = std::chrono::milliseconds(0);
  RankReport rt = lower_rank(s, instant);
  CHECK(rt.status == RankStatus::lower_bound);
  CHECK(rt.value == 1);
  CHECK(rt.witness.has_value());

  RankReport r4 = independent_set_search(s, false, starved);
  CHECK(r4.status == RankStatus::lower_bound);
  CHECK(r4.value >= 1);
  if (r4.witness) CHECK(is_independent(s, s.set_of(r4.witness->elements)));

  // The prime search needs a zero node budget to truncate: its per-stage
  // violation trees at small sizes are only a handful of nodes deep.
  SearchBudget zero_nodes = quick_budget();
  zero_nodes.node_limit = 0;
  RankReport rp = smallest_prime_subset(s, zero_nodes);
  CHECK(rp.status == RankStatus::lower_bound);
  CHECK(rp.value >= 1);
  CHECK(!rp.witness.has_value());

  RankReport r5 = large_rank(s, zero_nodes);
  CHECK(r5.status == RankStatus::upper_bound);
  CHECK(r5.value >= 28);
}

TEST_CASE("seeds sharpen truncated searches and invalid seeds are ignored") {
  FiniteSemigroup s = aplus2();

  // The golden minimum generating set, supplied as a seed, keeps the
  // truncated report's witness at the true optimum.
  ElementSet golden = s.set_of({1, 5, 23, 26});
  SearchBudget starved = quick_budget();
  starved.node_limit = 10;
  RankReport r = lower_rank(s, starved, {golden});
  CHECK(r.status == RankStatus::lower_bound);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->elements == golden.members());
  CHECK(r.details.find("from a supplied seed") != std::string::npos);

  // A non-generating seed is ignored.
  RankReport r2 = lower_rank(s, starved, {s.set_of({0})});
  CHECK(r2.witness->elements.size() >= 4);

  // Independent-set seeds: an invalid one is counted, a valid one is used.
  // {zero, ss:(1,1)->(1,2)} is dependent: the point map squares to zero.
  RankReport r4 = independent_set_search(s, false, starved, {s.set_of({0, 6})});
  CHECK(r4.details.find("1 seed(s) failed validation") != std::string::npos);
  ElementSet big = s.set_of({1, 2, 3, 5, 8, 10, 12, 15, 16, 20, 21, 27});
  REQUIRE(is_independent(s, big));
  RankReport r4b = independent_set_search(s, false, starved, {big});
  CHECK(r4b.value == 12);
  CHECK(r4b.status == RankStatus::lower_bound);
  CHECK(r4b.details.find("came from a supplied seed") != std::string::npos);
}

TEST_CASE("rank reports carry the human-readable names") {
  CHECK(std::string(rank_status_name(RankStatus::exact)) == "exact");
  CHECK(std::string(rank_status_name(RankStatus::lower_bound)) == "lower-bound");
  CHECK(std::string(rank_status_name(RankStatus::upper_bound)) == "upper-bound");
  CHECK(std::string(rank_status_name(RankStatus::formula)) == "formula");
  CHECK(std::string(rank_method_name(RankMethod::search)) == "search");
  CHECK(std::string(rank_method_name(RankMethod::theorem_certified)) == "theorem-certified");
  CHECK(std::string(rank_method_name(RankMethod::formula)) == "formula");
}

TEST_CASE("the five ranks chain upward on the degree-2 catalog") {
  FiniteSemigroup s = aplus2();
  SearchBudget b = quick_budget();
  int64_t v1 = small_rank(s).value;
  int64_t v2 = lower_rank(s, b).value;
  int64_t v3 = independent_set_search(s, true, b).value;
  int64_t v4 = independent_set_search(s, false, b).value;
  int64_t v5 = large_rank(s, b).value;
  CHECK(v1 <= v2);
  CHECK(v2 <= v3);
  CHECK(v3 <= v4);
  CHECK(v4 <= v5);
  CHECK(std::vector<int64_t>{v1, v2, v3, v4, v5} ==
        std::vector<int64_t>{1, 4, 5, 12, 28});
}
