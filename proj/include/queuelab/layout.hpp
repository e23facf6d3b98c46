#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "queuelab/core.hpp"
#include "queuelab/rainbow.hpp"

namespace queuelab {

// Queue count of a fixed vertex ordering; equals its max rainbow size.
int ordered_queue_number(const OrderedGraph& g);

// Relabels g by the given ordering: the vertex order[p-1] becomes position p.
// order must be a permutation of 1..n.
OrderedGraph apply_order(const LabelledGraph& g, std::span<const int> order);

// FIFO breadth-first ordering; components are started from their smallest
// vertex, neighbors explored in ascending label order. On a tree this yields
// a nesting-free ordering.
std::vector<int> bfs_order(const LabelledGraph& g);

struct LayoutResult {
    int queue_number = 0;
    std::vector<int> witness_order;     // position -> vertex label
    QueueAssignment witness_assignment; // greedy partition of the witness layout
    bool exact = false;                 // true iff the search ran to completion
    std::uint64_t nodes_expanded = 0;
};

struct ExactOptions {
    std::uint64_t node_budget = 10'000'000; // partial orderings expanded
    bool reversal_pruning = true;           // halve the search via order reversal symmetry
};

// Minimum queue count over all vertex orderings, by branch and bound over
// left-to-right placements. A branch is pruned once the rainbow among
// already-placed edges reaches the incumbent. If the node budget runs out,
// exact is cleared and the best upper bound found so far is returned.
LayoutResult exact_queue_number(const LabelledGraph& g, const ExactOptions& opts = {});

// Best ordering among `restarts` seeded random shuffles plus one BFS
// ordering. Always an upper bound (exact stays false). Deterministic for a
// fixed seed.
LayoutResult heuristic_queue_number(const LabelledGraph& g, int restarts, std::uint64_t seed);

} // namespace queuelab
