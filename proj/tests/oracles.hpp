#pragma once

// Test-side oracles, kept independent of the library's sweep/search code:
// everything here is plain brute force over subsets, assignments, or
// permutations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "queuelab/core.hpp"

namespace oracles {

using queuelab::LabelledGraph;
using queuelab::OrderedEdge;
using queuelab::are_nested;
using queuelab::is_nested;

// Largest pairwise-nested subset by checking every edge subset.
inline int brute_max_rainbow(const std::vector<OrderedEdge>& edges)
{
    int m = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<OrderedEdge> sub;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1)
                sub.push_back(edges[i]);
        bool pairwise = true;
        for (std::size_t i = 0; i < sub.size() && pairwise; ++i)
            for (std::size_t j = i + 1; j < sub.size() && pairwise; ++j)
                if (!are_nested(sub[i], sub[j]))
                    pairwise = false;
        if (pairwise)
            best = std::max<int>(best, static_cast<int>(sub.size()));
    }
    return best;
}

// Minimum number of nesting-free classes covering the edges: try k = 1, 2, ...
// and search all class assignments (first-fit symmetry break).
inline bool brute_assign(const std::vector<OrderedEdge>& edges, std::vector<int>& cls,
                         std::size_t i, int k, int used)
{
    if (i == edges.size())
        return true;
    for (int c = 1; c <= std::min(used + 1, k); ++c) {
        bool clash = false;
        for (std::size_t j = 0; j < i; ++j)
            if (cls[j] == c && are_nested(edges[i], edges[j])) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        cls[i] = c;
        if (brute_assign(edges, cls, i + 1, k, std::max(used, c)))
            return true;
    }
    return false;
}

inline int brute_min_partition(const std::vector<OrderedEdge>& edges)
{
    if (edges.empty())
        return 0;
    std::vector<int> cls(edges.size(), 0);
    for (int k = 1;; ++k)
        if (brute_assign(edges, cls, 0, k, 0))
            return k;
}

// All maximum chains by extension, returning the lexicographically smallest
// sequence in canonical edge order.
inline void extend_chains(const std::vector<OrderedEdge>& sorted, std::vector<OrderedEdge>& chain,
                          std::size_t from, std::vector<std::vector<OrderedEdge>>& maxima)
{
    bool extended = false;
    for (std::size_t i = from; i < sorted.size(); ++i) {
        if (chain.empty() || is_nested(chain.back(), sorted[i])) {
            chain.push_back(sorted[i]);
            extend_chains(sorted, chain, i + 1, maxima);
            chain.pop_back();
            extended = true;
        }
    }
    if (!extended && !chain.empty()) {
        if (maxima.empty() || chain.size() > maxima.front().size()) {
            maxima.clear();
            maxima.push_back(chain);
        } else if (chain.size() == maxima.front().size()) {
            maxima.push_back(chain);
        }
    }
}

inline std::vector<OrderedEdge> brute_lexmin_max_chain(std::vector<OrderedEdge> edges)
{
    if (edges.empty())
        return {};
    std::sort(edges.begin(), edges.end());
    std::vector<std::vector<OrderedEdge>> maxima;
    std::vector<OrderedEdge> chain;
    extend_chains(edges, chain, 0, maxima);
    return *std::min_element(maxima.begin(), maxima.end());
}

// Longest nesting chain by pairwise dynamic programming (no sweep, no
// Fenwick); used to score orderings independently of the library.
inline int chain_dp(std::vector<OrderedEdge> edges)
{
    std::sort(edges.begin(), edges.end());
    int best = 0;
    std::vector<int> dp(edges.size(), 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (is_nested(edges[j], edges[i]))
                dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

// Exact queue-number by trying every permutation of 1..n.
inline int naive_queue_number(const LabelledGraph& g)
{
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int v = 1; v <= n; ++v)
        perm[v - 1] = v;
    int best = std::numeric_limits<int>::max();
    std::vector<int> pos(n + 1);
    do {
        for (int p = 0; p < n; ++p)
            pos[perm[p]] = p + 1;
        std::vector<OrderedEdge> laid;
        for (const auto& e : g.edges())
            laid.push_back(queuelab::normalize_edge(pos[e.left], pos[e.right]));
        best = std::min(best, chain_dp(std::move(laid)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Labelled tree on n >= 2 vertices from a Prufer sequence (values 1..n).
inline std::vector<OrderedEdge> prufer_tree(int n, const std::vector<int>& seq)
{
    std::vector<int> degree(n + 1, 1);
    for (int v : seq)
        ++degree[v];
    std::vector<OrderedEdge> edges;
    std::vector<bool> used(n + 1, false);
    for (int v : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.push_back(queuelab::normalize_edge(leaf, v));
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    int a = 0;
    for (int v = 1; v <= n; ++v)
        if (!used[v] && degree[v] >= 1) {
            if (a == 0)
                a = v;
            else
                edges.push_back(queuelab::normalize_edge(a, v));
        }
    return edges;
}

} // namespace oracles
