#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgrank/affine.hpp"

namespace sgrank {

enum class CheckOutcome { pass, fail, skipped_infeasible };

const char* check_outcome_name(CheckOutcome o);

// One machine-checked structural claim about the catalog at a given n.
struct TheoremCheck {
  std::string id;           // stable kebab-case identifier
  std::string description;  // the claim in words
  uint32_t n = 0;
  CheckOutcome outcome = CheckOutcome::fail;
  std::string details;
};

// Generating family of the n-support fragment plus zero: n+1 maps for
// n >= 3 (a cycle and a transposition anchored at the first rows, then a
// chain of identity translations), two maps for n = 2.
std::vector<AffMap> nsupport_generating_family(uint32_t n);

// Minimum-size generating family of the whole catalog: the n-support family
// plus one constant and one point map.
std::vector<AffMap> minimum_generating_family(uint32_t n);

// Independent generating family of size 2n: identity translations around a
// cycle, the adjacent transpositions anchored at one cell, one constant and
// one point map.
std::vector<AffMap> independent_generating_family(uint32_t n);

// Independent family of size n!*floor(n^2/4) + n + 2, witnessing a lower
// bound for the largest independent set.
std::vector<AffMap> large_independent_family(uint32_t n);

// Runs every structural check the library certifies at this n (1 <= n <= 3)
// and reports one row per claim, sorted by id.  With perturb_table the
// full-catalog table is corrupted in one entry first; a correct
// implementation must then report at least one failure.
std::vector<TheoremCheck> verify_claims(uint32_t n, bool perturb_table = false);

}  // namespace sgrank
