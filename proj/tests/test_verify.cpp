#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "sgrank/affine.hpp"
#include "sgrank/semigroup.hpp"
#include "sgrank/verify.hpp"

using namespace sgrank;

namespace {

uint32_t count_outcome(const std::vector<TheoremCheck>& checks, CheckOutcome o) {
  uint32_t c = 0;
  for (const TheoremCheck& t : checks)
    if (t.outcome == o) ++c;
  return c;
}

}  // namespace

TEST_CASE("every structural claim passes at degree one") {
  std::vector<TheoremCheck> checks = verify_claims(1);
  CHECK(checks.size() == 8);
  CHECK(count_outcome(checks, CheckOutcome::fail) == 0);
  CHECK(count_outcome(checks, CheckOutcome::skipped_infeasible) == 0);
  for (const TheoremCheck& t : checks) CHECK(t.n == 1);
}

TEST_CASE("every structural claim passes at degree two") {
  std::vector<TheoremCheck> checks = verify_claims(2);
  CHECK(checks.size() == 21);
  CHECK(count_outcome(checks, CheckOutcome::fail) == 0);
  CHECK(count_outcome(checks, CheckOutcome::skipped_infeasible) == 0);
  // Rows come back sorted by id.
  CHECK(std::is_sorted(checks.begin(), checks.end(),
                       [](const TheoremCheck& a, const TheoremCheck& b) { return a.id < b.id; }));
  // Every row has a nonempty id and description.
  for (const TheoremCheck& t : checks) {
    CHECK(!t.id.empty());
    CHECK(!t.description.empty());
  }
}

TEST_CASE("degree three passes everything except the infeasible exact search") {
  std::vector<TheoremCheck> checks = verify_claims(3);
  CHECK(count_outcome(checks, CheckOutcome::fail) == 0);
  CHECK(count_outcome(checks, CheckOutcome::skipped_infeasible) == 1);
  auto skipped = std::find_if(checks.begin(), checks.end(), [](const TheoremCheck& t) {
    return t.outcome == CheckOutcome::skipped_infeasible;
  });
  REQUIRE(skipped != checks.end());
  CHECK(skipped->id == "exact-intermediate-upper");
}

TEST_CASE("a corrupted table is caught by at least one check") {
  std::vector<TheoremCheck> checks = verify_claims(2, /*perturb_table=*/true);
  CHECK(count_outcome(checks, CheckOutcome::fail) >= 1);
  auto failed = std::find_if(checks.begin(), checks.end(), [](const TheoremCheck& t) {
    return t.outcome == CheckOutcome::fail;
  });
  REQUIRE(failed != checks.end());
  CHECK(failed->id == "table-pointwise-consistency");
}

TEST_CASE("verification is bounded to the machine-checkable degrees") {
  CHECK_THROWS_AS(verify_claims(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_claims(4), std::invalid_argument);
}

TEST_CASE("outcome names are kebab-case") {
  CHECK(std::string(check_outcome_name(CheckOutcome::pass)) == "pass");
  CHECK(std::string(check_outcome_name(CheckOutcome::fail)) == "fail");
  CHECK(std::string(check_outcome_name(CheckOutcome::skipped_infeasible)) ==
        "skipped-infeasible");
}

TEST_CASE("witness families have the counted sizes and properties") {
  for (uint32_t n : {2u, 3u}) {
    FiniteSemigroup s = build_cayley(enumerate_aplus(n));
    auto as_set = [&](const std::vector<AffMap>& fam) {
      ElementSet u = s.empty_set();
      for (const AffMap& f : fam) u.insert(aplus_index(f));
      return u;
    };

    std::vector<AffMap> ns = nsupport_generating_family(n);
    CHECK(ns.size() == (n == 2 ? 2 : n + 1));
    for (const AffMap& f : ns) CHECK(f.kind() == AffMap::Kind::n_support);

    std::vector<AffMap> min_fam = minimum_generating_family(n);
    CHECK(min_fam.size() == ns.size() + 2);
    CHECK(is_generating(s, as_set(min_fam)));

    std::vector<AffMap> indep_gen = independent_generating_family(n);
    CHECK(indep_gen.size() == 2 * n);
    CHECK(is_independent(s, as_set(indep_gen)));
    CHECK(is_generating(s, as_set(indep_gen)));

    std::vector<AffMap> large = large_independent_family(n);
    uint32_t factorial = (n == 2) ? 2 : 6;
    CHECK(large.size() == factorial * ((n * n) / 4) + n + 2);
    CHECK(is_independent(s, as_set(large)));
  }
  CHECK(large_independent_family(2).size() == 6);
  CHECK(large_independent_family(3).size() == 17);
}

TEST_CASE("witness families reject degree one") {
  CHECK_THROWS_AS(nsupport_generating_family(1), std::invalid_argument);
  CHECK_THROWS_AS(independent_generating_family(1), std::invalid_argument);
  CHECK_THROWS_AS(large_independent_family(1), std::invalid_argument);
}
