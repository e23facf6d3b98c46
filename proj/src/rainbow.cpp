#include "queuelab/rainbow.hpp"

#include <algorithm>

namespace queuelab {

namespace {

// Fenwick tree over 1..size supporting prefix-max queries.
class PrefixMax {
public:
    explicit PrefixMax(int size) : tree_(size + 1, 0) {}

    void update(int i, int value)
    {
        for (; i < static_cast<int>(tree_.size()); i += i & -i)
            tree_[i] = std::max(tree_[i], value);
    }

    int query(int i) const // max over 1..i, 0 if i < 1
    {
        int best = 0;
        for (; i > 0; i -= i & -i)
            best = std::max(best, tree_[i]);
        return best;
    }

private:
    std::vector<int> tree_;
};

// Chain lengths with each edge as the outermost element ("downward" depth).
// Edges must be in canonical order. Processes groups of equal left from the
// right; a group is inserted only after all its queries, since equal-left
// edges cannot nest.
std::vector<int> down_depths(const std::vector<OrderedEdge>& edges, int n)
{
    std::vector<int> down(edges.size(), 1);
    PrefixMax best_inside(n); // keyed by right endpoint
    int i = static_cast<int>(edges.size()) - 1;
    while (i >= 0) {
        int j = i;
        while (j >= 0 && edges[j].left == edges[i].left)
            --j;
        for (int t = j + 1; t <= i; ++t)
            down[t] = 1 + best_inside.query(edges[t].right - 1);
        for (int t = j + 1; t <= i; ++t)
            best_inside.update(edges[t].right, down[t]);
        i = j;
    }
    return down;
}

} // namespace

int max_rainbow_size(std::span<const OrderedEdge> edges)
{
    std::vector<OrderedEdge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    // patience-style longest strictly decreasing subsequence of rights
    std::vector<int> tails; // tails[d] = largest negated right of a chain of length d+1
    for (const auto& e : sorted) {
        int key = -e.right;
        auto it = std::lower_bound(tails.begin(), tails.end(), key);
        if (it == tails.end())
            tails.push_back(key);
        else
            *it = key;
    }
    return static_cast<int>(tails.size());
}

std::vector<int> nesting_depths(const OrderedGraph& g)
{
    return down_depths(g.edges(), g.vertex_count());
}

MaxRainbow max_rainbow(const OrderedGraph& g)
{
    MaxRainbow result;
    const auto& edges = g.edges();
    if (edges.empty())
        return result;
    int n = g.vertex_count();
    std::vector<int> down = down_depths(edges, n);
    int size = *std::max_element(down.begin(), down.end());
    result.size = size;

    // Greedy lexicographic extraction: the edge at position p of a maximum
    // chain has down-depth exactly size-p+1, so pick the canonically
    // smallest candidate nested inside the previous pick. Bucket pointers
    // only move forward, giving O(m) extraction.
    std::vector<std::vector<int>> buckets(size + 1);
    for (int idx = 0; idx < static_cast<int>(edges.size()); ++idx)
        buckets[down[idx]].push_back(idx);
    std::vector<std::size_t> cursor(size + 1, 0);
    int prev = -1;
    for (int p = 1; p <= size; ++p) {
        auto& bucket = buckets[size - p + 1];
        std::size_t& c = cursor[size - p + 1];
        while (c < bucket.size() &&
               !(prev < 0 || is_nested(edges[prev], edges[bucket[c]])))
            ++c;
        prev = bucket[c];
        result.certificate.edges.push_back(edges[prev]);
    }
    return result;
}

QueueAssignment greedy_partition(const OrderedGraph& g)
{
    QueueAssignment a;
    a.graph = g;
    a.queue_of = nesting_depths(g);
    a.queue_count =
        a.queue_of.empty() ? 0 : *std::max_element(a.queue_of.begin(), a.queue_of.end());
    return a;
}

bool validate_assignment(const QueueAssignment& a)
{
    const auto& edges = a.graph.edges();
    if (a.queue_of.size() != edges.size())
        return false;
    for (int q : a.queue_of)
        if (q < 1 || q > a.queue_count)
            return false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (a.queue_of[i] == a.queue_of[j] && are_nested(edges[i], edges[j]))
                return false;
    return true;
}

} // namespace queuelab
