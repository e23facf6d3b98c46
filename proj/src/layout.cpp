#include "queuelab/layout.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "queuelab/randreg.hpp"

namespace queuelab {

int ordered_queue_number(const OrderedGraph& g)
{
    return max_rainbow_size(g.edges());
}

OrderedGraph apply_order(const LabelledGraph& g, std::span<const int> order)
{
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("apply_order: order size mismatch");
    std::vector<int> pos(n + 1, 0);
    for (int p = 0; p < n; ++p) {
        int v = order[p];
        if (v < 1 || v > n || pos[v] != 0)
            throw std::invalid_argument("apply_order: not a permutation of 1..n");
        pos[v] = p + 1;
    }
    std::vector<OrderedEdge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.push_back(normalize_edge(pos[e.left], pos[e.right]));
    return OrderedGraph(n, std::move(edges));
}

std::vector<int> bfs_order(const LabelledGraph& g)
{
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> seen(n + 1, false);
    for (int root = 1; root <= n; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            int v = order[head++];
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

namespace {

LayoutResult make_result(const LabelledGraph& g, std::vector<int> order, bool exact,
                         std::uint64_t nodes)
{
    LayoutResult r;
    r.witness_order = std::move(order);
    OrderedGraph laid_out = apply_order(g, r.witness_order);
    r.witness_assignment = greedy_partition(laid_out);
    r.queue_number = r.witness_assignment.queue_count;
    r.exact = exact;
    r.nodes_expanded = nodes;
    return r;
}

// Branch and bound over left-to-right placements of the non-isolated
// vertices. Isolated vertices never affect the rainbow and are appended to
// witness orders afterwards.
class ExactSearch {
public:
    ExactSearch(const LabelledGraph& g, const ExactOptions& opts) : g_(g), opts_(opts)
    {
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (!g.neighbors(v).empty())
                active_.push_back(v);
        }
        placed_pos_.assign(g.vertex_count() + 1, 0);
    }

    LayoutResult run()
    {
        if (active_.empty())
            return full_result(identity_order(), true);

        // Seed the incumbent with cheap orderings; not counted as nodes.
        consider(active_);
        consider(active_bfs());

        prefix_.clear();
        live_.clear();
        exhausted_ = true;
        descend();

        bool exact = exhausted_;
        return full_result(best_order_, exact);
    }

private:
    std::vector<int> identity_order() const
    {
        std::vector<int> order(g_.vertex_count());
        for (int v = 1; v <= g_.vertex_count(); ++v)
            order[v - 1] = v;
        return order;
    }

    std::vector<int> active_bfs() const
    {
        std::vector<int> order = bfs_order(g_);
        std::erase_if(order, [&](int v) { return g_.neighbors(v).empty(); });
        return order;
    }

    // Evaluates a complete ordering of the active vertices.
    void consider(const std::vector<int>& order)
    {
        std::vector<int> pos(g_.vertex_count() + 1, 0);
        for (std::size_t p = 0; p < order.size(); ++p)
            pos[order[p]] = static_cast<int>(p) + 1;
        std::vector<OrderedEdge> edges;
        for (const auto& e : g_.edges())
            edges.push_back(normalize_edge(pos[e.left], pos[e.right]));
        int value = max_rainbow_size(edges);
        if (value < incumbent_) {
            incumbent_ = value;
            best_order_ = order;
        }
    }

    void descend()
    {
        if (incumbent_ <= 1) // 0 impossible here, 1 cannot be beaten
            return;
        if (nodes_ >= opts_.node_budget) {
            exhausted_ = false;
            return;
        }
        ++nodes_;

        int live_rainbow = max_rainbow_size(live_);
        if (live_rainbow >= incumbent_)
            return; // completions only grow the rainbow

        std::size_t depth = prefix_.size();
        if (depth == active_.size()) {
            incumbent_ = live_rainbow;
            best_order_ = prefix_;
            return;
        }

        for (int v : active_) {
            if (placed_pos_[v] != 0)
                continue;
            // An ordering and its reverse have equal rainbows; keep only the
            // representative whose last vertex exceeds its first. Starting
            // with the largest active vertex can never satisfy that.
            if (opts_.reversal_pruning && active_.size() > 1) {
                if (depth == 0 && v == active_.back())
                    continue;
                if (depth + 1 == active_.size() && v < prefix_.front())
                    continue;
            }
            place(v);
            descend();
            unplace(v);
            if (!exhausted_ && nodes_ >= opts_.node_budget)
                return;
        }
    }

    void place(int v)
    {
        prefix_.push_back(v);
        placed_pos_[v] = static_cast<int>(prefix_.size());
        int added = 0;
        for (int w : g_.neighbors(v)) {
            if (placed_pos_[w] != 0 && w != v) {
                live_.push_back(normalize_edge(placed_pos_[w], placed_pos_[v]));
                ++added;
            }
        }
        added_counts_.push_back(added);
    }

    void unplace(int v)
    {
        live_.resize(live_.size() - added_counts_.back());
        added_counts_.pop_back();
        placed_pos_[v] = 0;
        prefix_.pop_back();
    }

    LayoutResult full_result(std::vector<int> active_order, bool exact) const
    {
        // append isolated vertices after the searched ones
        std::vector<bool> used(g_.vertex_count() + 1, false);
        for (int v : active_order)
            used[v] = true;
        for (int v = 1; v <= g_.vertex_count(); ++v)
            if (!used[v])
                active_order.push_back(v);
        return make_result(g_, std::move(active_order), exact, nodes_);
    }

    const LabelledGraph& g_;
    ExactOptions opts_;
    std::vector<int> active_;
    std::vector<int> prefix_;
    std::vector<int> placed_pos_;
    std::vector<OrderedEdge> live_;
    std::vector<int> added_counts_;
    std::vector<int> best_order_;
    int incumbent_ = std::numeric_limits<int>::max();
    std::uint64_t nodes_ = 0;
    bool exhausted_ = true;
};

} // namespace

LayoutResult exact_queue_number(const LabelledGraph& g, const ExactOptions& opts)
{
    if (!g.simple())
        throw std::invalid_argument("exact_queue_number: graph must be simple");
    ExactSearch search(g, opts);
    return search.run();
}

LayoutResult heuristic_queue_number(const LabelledGraph& g, int restarts, std::uint64_t seed)
{
    if (!g.simple())
        throw std::invalid_argument("heuristic_queue_number: graph must be simple");
    int n = g.vertex_count();

    std::vector<int> best = bfs_order(g);
    int best_value = ordered_queue_number(apply_order(g, best));

    SplitMix64 rng(seed);
    std::vector<int> order(n);
    for (int v = 1; v <= n; ++v)
        order[v - 1] = v;
    for (int r = 0; r < restarts; ++r) {
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(order[i], order[j]);
        }
        int value = ordered_queue_number(apply_order(g, order));
        if (value < best_value) {
            best_value = value;
            best = order;
        }
    }

    LayoutResult result = make_result(g, std::move(best), false, 0);
    return result;
}

} // namespace queuelab
