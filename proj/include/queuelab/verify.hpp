#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "queuelab/core.hpp"

namespace queuelab {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // summary on success, counterexample on failure
};

// Minimum number of nesting-free classes partitioning the edge set, by
// backtracking k-coloring of the nesting-conflict graph. Exponential;
// intended as the independent cross-check for the rainbow equivalence.
int min_nesting_free_partition(const std::vector<OrderedEdge>& edges);

// Runs every lemma-level verification at enumeration scale max_n (clamped
// per check to its own feasible range). Progress lines go to `progress`
// when non-null; one CheckResult per check.
std::vector<CheckResult> verify_lemmas(int max_n, std::ostream* progress = nullptr);

} // namespace queuelab
