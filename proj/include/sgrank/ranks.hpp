#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgrank/semigroup.hpp"

namespace sgrank {

enum class RankStatus { exact, lower_bound, upper_bound, formula };
enum class RankMethod { search, theorem_certified, formula };

const char* rank_status_name(RankStatus s);
const char* rank_method_name(RankMethod m);

// Outcome of one rank computation.  `value` is exact when status is exact;
// under a truncated search it is the certified bound named by `status`, and
// for minimisation searches the witness (when present) still documents the
// best construction found.
struct RankReport {
  std::string rank;  // "r1".."r5", or "prime" for the raw prime-subset search
  int64_t value = 0;
  RankStatus status = RankStatus::exact;
  std::optional<Witness> witness;
  RankMethod method = RankMethod::search;
  std::chrono::milliseconds elapsed{0};
  std::string details;
};

// Budgets for the anytime searches.  node_limit caps the nodes explored in
// each search branch (top-level subtree or seed), which keeps truncation
// deterministic under any parallelism width; time_limit is a global
// best-effort wall-clock guard.  Exhausting a budget degrades the report
// status, it never raises an error.
struct SearchBudget {
  std::chrono::milliseconds time_limit{60000};
  uint64_t node_limit = 50'000'000;
  uint32_t parallelism = 1;
};

// Raised when a structural certification sub-check fails; this signals an
// implementation bug, never a property of the input.
class certification_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// r1: largest k such that every k-subset is independent.  Exact; uses the
// shortcut that a non-band has the dependent pair {a, a*a}.
RankReport small_rank(const FiniteSemigroup& s);

// r2: least size of a generating set.  Iterative deepening over subset
// sizes in canonical order; exact when the search space is exhausted,
// otherwise a certified lower bound plus the best generating witness known
// (from `seeds` or a greedy pass).  Ties break to the lexicographically
// smallest witness.
RankReport lower_rank(const FiniteSemigroup& s, const SearchBudget& budget = {},
                      const std::vector<ElementSet>& seeds = {});

// r2 of the full transformation catalog of B_n by structural certification:
// machine-checks the support-propagation laws, the two removal closures,
// the Brandt lower rank n+1, and a generating witness of size n+3 (4 for
// n = 2).  n in {2, 3} is machine-certified; n >= 4 reports the formula
// value without machine exhaustion.
RankReport certified_lower_rank_aplus(uint32_t n);

// r4 (require_generating = false): largest independent set.
// r3 (require_generating = true): largest independent generating set.
// Exhaustive DFS over canonically ordered extensions; exact when every
// branch completed, otherwise a lower bound with the best witness found.
RankReport independent_set_search(const FiniteSemigroup& s, bool require_generating,
                                  const SearchBudget& budget = {},
                                  const std::vector<ElementSet>& seeds = {});

// Smallest prime subset (nonempty U with ab in U => a in U or b in U),
// by iterative deepening on the target size with violation branching.
// Exact with the lexicographically smallest witness, or a lower bound on
// the minimum size when truncated.
RankReport smallest_prime_subset(const FiniteSemigroup& s, const SearchBudget& budget = {});

// r5: least k such that every k-subset generates; equals
// |S| - |smallest prime subset| + 1 by complement duality.
RankReport large_rank(const FiniteSemigroup& s, const SearchBudget& budget = {});

}  // namespace sgrank
