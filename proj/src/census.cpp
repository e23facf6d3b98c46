#include "queuelab/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "queuelab/layout.hpp"
#include "queuelab/rainbow.hpp"

namespace queuelab {

namespace {

void check_limit(int n, int limit)
{
    if (n < 1)
        throw std::invalid_argument("census: n must be positive");
    if (n > limit)
        throw std::invalid_argument("census: n = " + std::to_string(n) +
                                    " exceeds enumeration limit " + std::to_string(limit));
    if (n * (n + 1) / 2 > 63)
        throw std::invalid_argument("census: candidate edge set does not fit a 64-bit mask");
}

// Bitmask of candidate edges nested with edge i (either direction).
std::vector<std::uint64_t> conflict_masks(const std::vector<OrderedEdge>& cand)
{
    std::vector<std::uint64_t> conflict(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (i != j && are_nested(cand[i], cand[j]))
                conflict[i] |= std::uint64_t{1} << j;
    return conflict;
}

// Bitmask of candidate edges strictly nested inside edge i. Such edges have
// a larger left endpoint, hence a larger canonical index.
std::vector<std::uint64_t> inside_masks(const std::vector<OrderedEdge>& cand)
{
    std::vector<std::uint64_t> inside(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (is_nested(cand[i], cand[j]))
                inside[i] |= std::uint64_t{1} << j;
    return inside;
}

// Visits every nesting-free subset as a mask. Output-sensitive: the
// recursion tree has one leaf per valid subset.
void visit_queue_masks(const std::vector<std::uint64_t>& conflict, std::size_t idx,
                       std::uint64_t chosen, std::uint64_t forbidden,
                       const std::function<void(std::uint64_t)>& visit)
{
    if (idx == conflict.size()) {
        visit(chosen);
        return;
    }
    visit_queue_masks(conflict, idx + 1, chosen, forbidden, visit);
    std::uint64_t bit = std::uint64_t{1} << idx;
    if (!(forbidden & bit))
        visit_queue_masks(conflict, idx + 1, chosen | bit, forbidden | conflict[idx], visit);
}

std::vector<OrderedEdge> mask_to_edges(const std::vector<OrderedEdge>& cand, std::uint64_t mask)
{
    std::vector<OrderedEdge> edges;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1)
            edges.push_back(cand[i]);
    return edges;
}

// Longest nesting chain within the subset, capped test: true iff it stays <= k.
// down[] is indexed by candidate-edge id; edges nested inside id i have ids
// above i, so a descending pass sees every needed value.
bool chain_at_most(const std::vector<std::uint64_t>& inside, std::uint64_t mask, int k)
{
    int down[64];
    int idx[64];
    int count = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        idx[count++] = std::countr_zero(rest);
    for (int t = count - 1; t >= 0; --t) {
        int i = idx[t];
        int best = 0;
        for (std::uint64_t in = inside[i] & mask; in; in &= in - 1)
            best = std::max(best, down[std::countr_zero(in)]);
        down[i] = 1 + best;
        if (down[i] > k)
            return false;
    }
    return true;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

std::vector<OrderedEdge> candidate_edges(int n)
{
    std::vector<OrderedEdge> cand;
    cand.reserve(n * (n + 1) / 2);
    for (int u = 1; u <= n; ++u)
        for (int v = u; v <= n; ++v)
            cand.push_back({u, v});
    return cand;
}

std::vector<OrderedEdge> candidate_simple_pairs(int n)
{
    std::vector<OrderedEdge> cand;
    cand.reserve(n * (n - 1) / 2);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            cand.push_back({u, v});
    return cand;
}

void for_each_queue_graph(int n, const std::function<void(const OrderedGraph&)>& visit,
                          int limit)
{
    check_limit(n, limit);
    auto cand = candidate_edges(n);
    auto conflict = conflict_masks(cand);
    visit_queue_masks(conflict, 0, 0, 0, [&](std::uint64_t mask) {
        visit(OrderedGraph(n, mask_to_edges(cand, mask)));
    });
}

mpz_class enumerate_queues(int n, int limit)
{
    check_limit(n, limit);
    auto cand = candidate_edges(n);
    auto conflict = conflict_masks(cand);
    mpz_class count = 0;
    visit_queue_masks(conflict, 0, 0, 0, [&](std::uint64_t) { ++count; });
    return count;
}

std::vector<mpz_class> queues_by_edges_table(int n, int limit)
{
    check_limit(n, limit);
    auto cand = candidate_edges(n);
    auto conflict = conflict_masks(cand);
    std::vector<mpz_class> table(cand.size() + 1, 0);
    visit_queue_masks(conflict, 0, 0, 0,
                      [&](std::uint64_t mask) { ++table[std::popcount(mask)]; });
    return table;
}

mpz_class count_queues_by_edges(int n, int m, int limit)
{
    check_limit(n, limit);
    if (m < 0 || m > n * (n + 1) / 2)
        throw std::invalid_argument("count_queues_by_edges: m out of range");
    return queues_by_edges_table(n, limit)[m];
}

mpz_class count_kqueues(int n, int m, int k, int limit)
{
    check_limit(n, limit);
    int total = n * (n + 1) / 2;
    if (m < 0 || k < 0)
        throw std::invalid_argument("count_kqueues: m and k must be non-negative");
    if (m > total)
        return 0;
    if (k == 0)
        return m == 0 ? 1 : 0;
    if (k >= m) // every m-edge graph is an m-queue via singleton classes
        return binomial(total, m);

    auto cand = candidate_edges(n);
    auto inside = inside_masks(cand);
    mpz_class count = 0;
    // Gosper's hack over all m-edge subsets of the candidate set.
    std::uint64_t subset = (std::uint64_t{1} << m) - 1;
    std::uint64_t end = std::uint64_t{1} << total;
    while (subset < end) {
        if (chain_at_most(inside, subset, k))
            ++count;
        std::uint64_t c = subset & -subset;
        std::uint64_t r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    return count;
}

mpz_class count_kqueues_with_sizes(int n, std::vector<int> sizes)
{
    if (n > 4)
        throw std::invalid_argument("count_kqueues_with_sizes: n <= 4 only");
    check_limit(n, 4);
    std::sort(sizes.begin(), sizes.end());
    for (int s : sizes)
        if (s < 0)
            throw std::invalid_argument("count_kqueues_with_sizes: negative class size");
    long total_edges = 0;
    for (int s : sizes)
        total_edges += s;

    auto cand = candidate_edges(n);
    int total = static_cast<int>(cand.size());
    if (total_edges > total)
        return 0;

    // Backtracking partition check: assign each edge of the subset to a class
    // with free capacity and no nesting conflict. Classes of equal size are
    // interchangeable; opening only the first empty slot of a size breaks the
    // symmetry.
    auto admits_partition = [&](const std::vector<OrderedEdge>& edges) {
        std::vector<int> remaining(sizes.begin(), sizes.end());
        std::vector<std::vector<OrderedEdge>> classes(sizes.size());
        std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
            if (i == edges.size())
                return true;
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (remaining[c] == 0)
                    continue;
                if (classes[c].empty() && c > 0 && classes[c - 1].empty() &&
                    sizes[c - 1] == sizes[c])
                    continue; // symmetric to using the previous empty class
                bool clash = false;
                for (const auto& f : classes[c])
                    if (are_nested(edges[i], f)) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                classes[c].push_back(edges[i]);
                --remaining[c];
                if (place(i + 1))
                    return true;
                ++remaining[c];
                classes[c].pop_back();
            }
            return false;
        };
        return place(0);
    };

    mpz_class count = 0;
    if (total_edges == 0)
        return 1; // only the empty graph
    std::uint64_t subset = (std::uint64_t{1} << total_edges) - 1;
    std::uint64_t end = std::uint64_t{1} << total;
    while (subset < end) {
        if (admits_partition(mask_to_edges(cand, subset)))
            ++count;
        std::uint64_t c = subset & -subset;
        std::uint64_t r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }

    // The partition count can never beat assembling the classes independently.
    mpz_class product = 1;
    auto table = queues_by_edges_table(n);
    for (int s : sizes)
        product *= table[s];
    if (count > product)
        throw std::logic_error("count_kqueues_with_sizes: product bound violated");
    return count;
}

std::vector<DoublingPattern> doubling_patterns(bool is_loop)
{
    std::vector<OrderedEdge> cand;
    if (is_loop)
        cand = {{1, 1}, {1, 2}, {2, 2}};
    else
        cand = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    std::vector<DoublingPattern> patterns;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size()); ++mask) {
        auto edges = mask_to_edges(cand, mask);
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i)
            for (std::size_t j = i + 1; j < edges.size() && ok; ++j)
                if (are_nested(edges[i], edges[j]))
                    ok = false;
        if (ok)
            patterns.push_back({std::move(edges)});
    }
    return patterns;
}

std::vector<OrderedEdge> instantiate_pattern(const DoublingPattern& p, int v, int w)
{
    std::vector<OrderedEdge> out;
    out.reserve(p.edges.size());
    for (const auto& e : p.edges) {
        // local labels 1,2 -> {2v-1,2v}; 3,4 -> {2w-1,2w}
        auto map = [&](int x) { return x <= 2 ? 2 * v - 2 + x : 2 * w - 4 + x; };
        out.push_back(normalize_edge(map(e.left), map(e.right)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrderedGraph quotient(const OrderedGraph& g2)
{
    if (g2.vertex_count() % 2 != 0)
        throw std::invalid_argument("quotient: vertex count must be even");
    int n = g2.vertex_count() / 2;
    std::vector<OrderedEdge> edges;
    for (const auto& e : g2.edges()) {
        OrderedEdge q{(e.left + 1) / 2, (e.right + 1) / 2};
        edges.push_back(q);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedGraph(n, std::move(edges));
}

DoublingReport verify_doubling(int n, int limit)
{
    check_limit(2 * n, limit);
    DoublingReport report;
    report.n = n;
    report.g_n = enumerate_queues(n, limit);
    report.g_2n = enumerate_queues(2 * n, limit);
    mpz_class eleven_pow;
    mpz_ui_pow_ui(eleven_pow.get_mpz_t(), 11, static_cast<unsigned long>(2 * n - 1));
    report.bound = eleven_pow * report.g_n;
    report.bound_holds = report.g_2n <= report.bound;
    if (!report.bound_holds)
        report.counterexample = "g(2n) exceeds 11^(2n-1)*g(n)";

    auto nonloop = doubling_patterns(false);
    auto loop = doubling_patterns(true);

    report.quotients_nesting_free = true;
    report.quotient_edges_bounded = true;
    report.roundtrip_covered = true;
    for_each_queue_graph(2 * n, [&](const OrderedGraph& g2) {
        if (!report.counterexample.empty())
            return; // first failure wins
        OrderedGraph q = quotient(g2);
        if (max_rainbow_size(q.edges()) > 1) {
            report.quotients_nesting_free = false;
            report.counterexample = "nested quotient of " + to_text(g2);
            return;
        }
        if (static_cast<int>(q.edges().size()) > 2 * n - 1) {
            report.quotient_edges_bounded = false;
            report.counterexample = "quotient with too many edges of " + to_text(g2);
            return;
        }
        // group the doubled graph's edges by quotient edge and match each
        // group against a pattern
        std::map<OrderedEdge, std::vector<OrderedEdge>> groups;
        for (const auto& e : g2.edges())
            groups[{(e.left + 1) / 2, (e.right + 1) / 2}].push_back(e);
        for (auto& [qe, group] : groups) {
            std::sort(group.begin(), group.end());
            const auto& patterns = qe.left == qe.right ? loop : nonloop;
            bool matched = false;
            for (const auto& p : patterns) {
                if (instantiate_pattern(p, qe.left, qe.right) == group) {
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                report.roundtrip_covered = false;
                report.counterexample = "unmatched doubling group in " + to_text(g2);
                return;
            }
        }
    });
    return report;
}

MaxEdgesResult max_queue_edges(int n, int limit)
{
    check_limit(n, limit);
    MaxEdgesResult result;
    std::uint64_t best_mask = 0;
    int best = -1;
    auto cand = candidate_edges(n);
    auto conflict = conflict_masks(cand);
    visit_queue_masks(conflict, 0, 0, 0, [&](std::uint64_t mask) {
        int m = std::popcount(mask);
        if (m > best) {
            best = m;
            best_mask = mask;
        }
    });
    result.max_edges = best;
    result.witness = OrderedGraph(n, mask_to_edges(cand, best_mask));

    if (best > 2 * n - 1)
        throw std::logic_error("max_queue_edges: bound 2n-1 violated");
    // nesting-free forces pairwise distinct endpoint sums in 2..2n
    std::vector<bool> seen(2 * n + 1, false);
    for (const auto& e : result.witness.edges()) {
        int sum = e.left + e.right;
        if (seen[sum])
            throw std::logic_error("max_queue_edges: witness has repeated edge sum");
        seen[sum] = true;
    }
    return result;
}

mpz_class count_labelled_qn_le(int n, int m, int k)
{
    if (n < 1 || n > 6)
        throw std::invalid_argument("count_labelled_qn_le: n <= 6 only");
    if (m < 0 || k < 0)
        throw std::invalid_argument("count_labelled_qn_le: m and k must be non-negative");
    auto cand = candidate_simple_pairs(n);
    int total = static_cast<int>(cand.size());
    if (m > total)
        return 0;

    mpz_class count = 0;
    if (m == 0) {
        count = 1; // the edgeless graph has queue-number 0
    } else {
        std::uint64_t subset = (std::uint64_t{1} << m) - 1;
        std::uint64_t end = std::uint64_t{1} << total;
        while (subset < end) {
            LabelledGraph g(n, mask_to_edges(cand, subset));
            if (exact_queue_number(g).queue_number <= k)
                ++count;
            std::uint64_t c = subset & -subset;
            std::uint64_t r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }

    // every ordered graph is isomorphic to at most n! labelled graphs
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
    if (count > count_kqueues(n, m, k) * factorial)
        throw std::logic_error("count_labelled_qn_le: n!-bound violated");
    return count;
}

RegularCensus count_labelled_regular(int n, int delta)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("count_labelled_regular: n <= 8 only");
    if (delta < 0 || delta >= n)
        throw std::invalid_argument("count_labelled_regular: need 0 <= delta < n");
    RegularCensus census;
    if ((static_cast<long long>(n) * delta) % 2 != 0) {
        census.odd_parity = true;
        census.count = 0;
        return census;
    }

    // Complete vertices in label order: vertex v picks its remaining
    // neighbors among higher labels with spare degree.
    std::vector<int> deg(n + 1, 0);
    std::vector<int> chosen;
    mpz_class count = 0;
    std::function<void(int)> complete = [&](int v) {
        if (v > n) {
            ++count;
            return;
        }
        int need = delta - deg[v];
        if (need == 0) {
            complete(v + 1);
            return;
        }
        if (need < 0)
            return;
        std::vector<int> cands;
        for (int w = v + 1; w <= n; ++w)
            if (deg[w] < delta)
                cands.push_back(w);
        if (static_cast<int>(cands.size()) < need)
            return;
        // choose `need` of cands by backtracking
        std::function<void(std::size_t, int)> pick = [&](std::size_t from, int left) {
            if (left == 0) {
                complete(v + 1);
                return;
            }
            if (cands.size() - from < static_cast<std::size_t>(left))
                return;
            for (std::size_t i = from; i < cands.size(); ++i) {
                int w = cands[i];
                if (deg[w] >= delta)
                    continue;
                ++deg[w];
                ++deg[v];
                pick(i + 1, left - 1);
                --deg[v];
                --deg[w];
            }
        };
        pick(0, need);
    };
    complete(1);
    census.count = count;
    return census;
}

} // namespace queuelab
