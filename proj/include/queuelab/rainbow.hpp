#pragma once

#include <span>
#include <vector>

#include "queuelab/core.hpp"

namespace queuelab {

// A chain under the nesting order: edges[i+1] is strictly nested inside
// edges[i], so by transitivity the set is pairwise nested. Outermost first.
struct RainbowCertificate {
    std::vector<OrderedEdge> edges;
};

struct MaxRainbow {
    int size = 0;
    RainbowCertificate certificate;
};

// Size of the largest pairwise-nested edge set. O(m log m): sort by
// (left asc, right asc) and take the longest strictly decreasing
// subsequence of right endpoints; the ascending tie-break keeps edges with
// equal left endpoints (which cannot nest) out of a common chain.
int max_rainbow_size(std::span<const OrderedEdge> edges);

// Size plus a certificate. Among maximum chains the lexicographically
// smallest edge sequence in canonical edge order is returned.
MaxRainbow max_rainbow(const OrderedGraph& g);

// depth(e) = 1 + size of the largest rainbow strictly nested inside e.
// Returned vector is parallel to g.edges(); max entry equals the max
// rainbow size (or the vector is empty for an edgeless graph).
std::vector<int> nesting_depths(const OrderedGraph& g);

// Partition of an ordered graph's edges into queues: queue_of is parallel
// to graph.edges(), with values in 1..queue_count.
struct QueueAssignment {
    OrderedGraph graph;
    std::vector<int> queue_of;
    int queue_count = 0;
};

// Assigns every edge to the queue given by its nesting depth. Two nested
// edges have different depths, so no queue contains a nested pair, and the
// number of queues equals the max rainbow size.
QueueAssignment greedy_partition(const OrderedGraph& g);

// True iff the assignment covers every edge with a queue index in
// 1..queue_count and no queue class contains a nested pair.
bool validate_assignment(const QueueAssignment& a);

} // namespace queuelab
