#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "queuelab/core.hpp"

namespace queuelab {

// Hard ceiling for the ordered-graph enumerations. n(n+1)/2 candidate edges
// must fit in a 64-bit mask; the default keeps runtimes at desk scale.
inline constexpr int kDefaultCensusLimit = 6;

// All candidate edges (u,v), u <= v, of an n-vertex ordered graph in
// canonical order. Loops included; size n(n+1)/2.
std::vector<OrderedEdge> candidate_edges(int n);

// The loopless candidate pairs u < v of a simple labelled graph; size C(n,2).
std::vector<OrderedEdge> candidate_simple_pairs(int n);

// Visits every nesting-free edge subset exactly once (backtracking over the
// canonical edge order with conflict masks; output-sensitive).
void for_each_queue_graph(int n, const std::function<void(const OrderedGraph&)>& visit,
                          int limit = kDefaultCensusLimit);

// g(n): number of queues (nesting-free ordered graphs) on n vertices.
mpz_class enumerate_queues(int n, int limit = kDefaultCensusLimit);

// g(n,m) for every m at once; index m of the result.
std::vector<mpz_class> queues_by_edges_table(int n, int limit = kDefaultCensusLimit);

// g(n,m): nesting-free ordered graphs with exactly m edges.
mpz_class count_queues_by_edges(int n, int m, int limit = kDefaultCensusLimit);

// g(n,m,k): m-edge ordered graphs whose max rainbow is at most k.
mpz_class count_kqueues(int n, int m, int k, int limit = kDefaultCensusLimit);

// g(n; m_1..m_k): ordered graphs admitting an edge partition into
// nesting-free classes of exactly the given sizes (sizes sorted ascending).
// Checks the product bound prod_i g(n, m_i) along the way. n <= 4.
mpz_class count_kqueues_with_sizes(int n, std::vector<int> sizes);

// One way of replacing a quotient edge during doubling: a nonempty
// nesting-free edge set on local labels. For a non-loop quotient edge the
// labels are 1,2 (= 2v-1,2v) and 3,4 (= 2w-1,2w) with edges between the
// pairs; for a loop the labels are 1,2 with edges inside the pair.
struct DoublingPattern {
    std::vector<OrderedEdge> edges;
};

// The 11 patterns for a non-loop quotient edge (the 4 candidate edges admit
// exactly one nested pair), or the 7 for a loop (3 candidates, none nested).
std::vector<DoublingPattern> doubling_patterns(bool is_loop);

// Concrete edges of a pattern applied to quotient edge (v,w); v == w applies
// a loop pattern.
std::vector<OrderedEdge> instantiate_pattern(const DoublingPattern& p, int v, int w);

// Merges vertex pair {2v-1,2v} into v: intra-pair edges become loops,
// parallel images collapse. Requires an even vertex count.
OrderedGraph quotient(const OrderedGraph& g2);

struct DoublingReport {
    int n = 0;
    mpz_class g_n;
    mpz_class g_2n;
    mpz_class bound; // 11^(2n-1) * g(n)
    bool bound_holds = false;
    bool quotients_nesting_free = false;
    bool quotient_edges_bounded = false; // every quotient has <= 2n-1 edges
    bool roundtrip_covered = false;      // every 2n-vertex queue redoubles from its quotient
    std::string counterexample;

    bool ok() const
    {
        return bound_holds && quotients_nesting_free && quotient_edges_bounded &&
               roundtrip_covered;
    }
};

// Enumerates queues on 2n vertices and checks the doubling recurrence
// g(2n) <= 11^(2n-1) * g(n) together with the quotient-side facts it rests on.
DoublingReport verify_doubling(int n, int limit = kDefaultCensusLimit);

struct MaxEdgesResult {
    int max_edges = 0;
    OrderedGraph witness;
};

// Maximum edge count over nesting-free ordered graphs on n vertices, with a
// witness. Checks max <= 2n-1 and that the witness's edge sums v+w are
// pairwise distinct (the mechanism forcing the bound).
MaxEdgesResult max_queue_edges(int n, int limit = kDefaultCensusLimit);

// Labelled simple graphs on n vertices with m edges and queue-number <= k
// (queue-number by exact search per graph). Checks the count against
// g(n,m,k) * n!. n <= 6.
mpz_class count_labelled_qn_le(int n, int m, int k);

struct RegularCensus {
    mpz_class count;
    bool odd_parity = false; // n*delta odd: no such graphs exist
};

// Labelled simple delta-regular graphs on n vertices by backtracking over
// per-vertex neighbor choices. n <= 8.
RegularCensus count_labelled_regular(int n, int delta);

} // namespace queuelab
