#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "queuelab/census.hpp"
#include "queuelab/rainbow.hpp"

using namespace queuelab;

TEST_CASE("queue census matches the frozen values")
{
    CHECK(enumerate_queues(1) == 2);
    CHECK(enumerate_queues(2) == 8);
    CHECK(enumerate_queues(3) == 48);
    CHECK(enumerate_queues(4) == 352);
    CHECK(enumerate_queues(5) == 2880);
    CHECK(enumerate_queues(6) == 25216);
    CHECK_THROWS_AS(enumerate_queues(7), std::invalid_argument); // default limit
    CHECK_THROWS_AS(enumerate_queues(0), std::invalid_argument);
}

TEST_CASE("census agrees with a full-subset scan for n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        auto cand = candidate_edges(n);
        mpz_class expected = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
            std::vector<OrderedEdge> edges;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(cand[i]);
            if (oracles::brute_max_rainbow(edges) <= 1)
                ++expected;
        }
        CHECK(enumerate_queues(n) == expected);
    }
}

TEST_CASE("edge-count table sums to the total census")
{
    for (int n = 1; n <= 5; ++n) {
        auto table = queues_by_edges_table(n);
        mpz_class sum = 0;
        for (const auto& c : table)
            sum += c;
        CHECK(sum == enumerate_queues(n));
    }
    // frozen row for n = 3: m = 0..6
    auto t3 = queues_by_edges_table(3);
    CHECK(t3 == std::vector<mpz_class>{1, 6, 14, 16, 9, 2, 0});
}

TEST_CASE("count_queues_by_edges worked examples")
{
    CHECK(count_queues_by_edges(2, 0) == 1);
    CHECK(count_queues_by_edges(2, 3) == 1);
    CHECK_THROWS_AS(count_queues_by_edges(2, 4), std::invalid_argument);
}

TEST_CASE("count_kqueues worked examples")
{
    CHECK(count_kqueues(3, 6, 2) == 1);
    CHECK(count_kqueues(2, 2, 2) == 3);
    CHECK(count_kqueues(2, 2, 1) == 3);
    CHECK(count_kqueues(5, 9, 1) == 14);
    CHECK(count_kqueues(5, 15, 3) == 1);
    CHECK(count_kqueues(5, 15, 2) == 0);
}

TEST_CASE("count_kqueues is monotone in k and saturates at C(N, m)")
{
    for (int n = 2; n <= 4; ++n) {
        int total = n * (n + 1) / 2;
        for (int m = 0; m <= total; ++m) {
            mpz_class previous = -1;
            for (int k = 0; k <= m + 1; ++k) {
                mpz_class count = count_kqueues(n, m, k);
                CHECK(count >= previous);
                previous = count;
            }
            mpz_class all;
            mpz_bin_uiui(all.get_mpz_t(), total, m);
            CHECK(count_kqueues(n, m, m) == all);
        }
    }
}

TEST_CASE("one-queue counts match the by-edges census")
{
    for (int n = 1; n <= 5; ++n) {
        auto table = queues_by_edges_table(n);
        for (int m = 0; m < static_cast<int>(table.size()); ++m)
            CHECK(count_kqueues(n, m, 1) == table[m]);
    }
}

TEST_CASE("count_kqueues_with_sizes worked examples")
{
    CHECK(count_kqueues_with_sizes(2, {1, 1}) == 3);
    CHECK(count_kqueues_with_sizes(3, {0, 0, 0}) == 1);
    CHECK(count_kqueues_with_sizes(2, {}) == 1);
    // one class of size m reduces to the plain census
    for (int m = 0; m <= 10; ++m)
        CHECK(count_kqueues_with_sizes(4, {m}) == count_queues_by_edges(4, m));
    CHECK_THROWS_AS(count_kqueues_with_sizes(5, {1}), std::invalid_argument);
}

TEST_CASE("doubling patterns: 11 plain, 7 loop, cross-checked by brute force")
{
    auto nonloop = doubling_patterns(false);
    auto loop = doubling_patterns(true);
    CHECK(nonloop.size() == 11);
    CHECK(loop.size() == 7);

    // independent recount: nonempty candidate subsets with no nested pair
    auto recount = [](std::vector<OrderedEdge> cand) {
        int count = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size()); ++mask) {
            std::vector<OrderedEdge> sub;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (mask >> i & 1)
                    sub.push_back(cand[i]);
            bool ok = true;
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = i + 1; j < sub.size(); ++j)
                    if (are_nested(sub[i], sub[j]))
                        ok = false;
            count += ok;
        }
        return count;
    };
    CHECK(recount({{1, 3}, {1, 4}, {2, 3}, {2, 4}}) == 11);
    CHECK(recount({{1, 1}, {1, 2}, {2, 2}}) == 7);

    // exactly 2^2 of the 15 nonempty subsets contain the unique nested pair
    CHECK(15 - 4 == 11);

    std::set<std::vector<OrderedEdge>> seen;
    for (const auto& p : nonloop) {
        CHECK_FALSE(p.edges.empty());
        seen.insert(p.edges);
    }
    CHECK(seen.size() == 11); // all distinct
}

TEST_CASE("instantiate_pattern maps local labels onto vertex pairs")
{
    DoublingPattern cross{{{1, 4}, {2, 3}}};
    // quotient edge (1,2): blocks {1,2} and {3,4}
    CHECK(instantiate_pattern(cross, 1, 2) ==
          std::vector<OrderedEdge>{{1, 4}, {2, 3}});
    // quotient edge (2,3): blocks {3,4} and {5,6}
    CHECK(instantiate_pattern(cross, 2, 3) ==
          std::vector<OrderedEdge>{{3, 6}, {4, 5}});
    DoublingPattern looppat{{{1, 2}, {2, 2}}};
    CHECK(instantiate_pattern(looppat, 3, 3) ==
          std::vector<OrderedEdge>{{5, 6}, {6, 6}});
}

TEST_CASE("quotient worked examples")
{
    CHECK(quotient(OrderedGraph(4, {{1, 3}, {2, 4}})) == OrderedGraph(2, {{1, 2}}));
    CHECK(quotient(OrderedGraph(4, {{1, 2}})) == OrderedGraph(2, {{1, 1}}));
    CHECK_THROWS_AS(quotient(OrderedGraph(3, {})), std::invalid_argument);
}

TEST_CASE("quotients of nesting-free graphs stay nesting-free (2n = 4)")
{
    for_each_queue_graph(4, [](const OrderedGraph& g) {
        OrderedGraph q = quotient(g);
        CHECK(oracles::brute_max_rainbow(q.edges()) <= 1);
    });
}

TEST_CASE("verify_doubling for n = 1, 2")
{
    auto r1 = verify_doubling(1);
    CHECK(r1.ok());
    CHECK(r1.g_n == 2);
    CHECK(r1.g_2n == 8);
    CHECK(r1.bound == 22);

    auto r2 = verify_doubling(2);
    CHECK(r2.ok());
    CHECK(r2.g_2n == 352);
    CHECK(r2.bound == mpz_class(11) * 11 * 11 * 8);
}

TEST_CASE("max_queue_edges achieves 2n-1 with distinct sums")
{
    CHECK(max_queue_edges(1).max_edges == 1);
    auto r3 = max_queue_edges(3);
    CHECK(r3.max_edges == 5);
    CHECK(static_cast<int>(r3.witness.edges().size()) == 5);
    std::set<int> sums;
    for (const auto& e : r3.witness.edges())
        sums.insert(e.left + e.right);
    CHECK(sums.size() == 5); // pairwise distinct
    CHECK(max_queue_edges(4).max_edges == 7);
}

TEST_CASE("labelled queue-number census worked examples")
{
    // on 3 vertices no ordering can nest two edges, so every graph counts
    for (int m = 0; m <= 3; ++m) {
        mpz_class expected;
        mpz_bin_uiui(expected.get_mpz_t(), 3, m);
        CHECK(count_labelled_qn_le(3, m, 1) == expected);
    }
    CHECK(count_labelled_qn_le(4, 6, 1) == 0); // K4 needs two queues
    CHECK(count_labelled_qn_le(4, 6, 2) == 1);
    CHECK(count_labelled_qn_le(4, 3, 1) == 20);
}

TEST_CASE("labelled regular census")
{
    auto k4 = count_labelled_regular(4, 3);
    CHECK(k4.count == 1);
    CHECK_FALSE(k4.odd_parity);

    auto odd = count_labelled_regular(5, 3);
    CHECK(odd.count == 0);
    CHECK(odd.odd_parity);

    CHECK(count_labelled_regular(6, 3).count == 70);
    CHECK(count_labelled_regular(8, 3).count == 19355);
    CHECK(count_labelled_regular(6, 2).count == 70);
    CHECK(count_labelled_regular(4, 0).count == 1);
    CHECK_THROWS_AS(count_labelled_regular(9, 3), std::invalid_argument);
}

TEST_CASE("labelled regular census agrees with the stub-pairing oracle at (6,3)")
{
    // Enumerate perfect matchings of the 18 half-edge stubs, counting the
    // simple outcomes; each simple graph corresponds to exactly (3!)^6
    // pairings.
    const int n = 6, delta = 3, stubs = n * delta;
    std::vector<int> partner(stubs, -1);
    std::vector<std::vector<int>> adj(n + 1, std::vector<int>(n + 1, 0));
    long long simple_pairings = 0;
    std::function<void(int)> match = [&](int matched) {
        if (matched == stubs) {
            ++simple_pairings;
            return;
        }
        int a = 0;
        while (partner[a] != -1)
            ++a;
        partner[a] = a;
        int u = a / delta + 1;
        for (int b = a + 1; b < stubs; ++b) {
            if (partner[b] != -1)
                continue;
            int v = b / delta + 1;
            if (u == v || adj[u][v])
                continue;
            partner[b] = a;
            adj[u][v] = adj[v][u] = 1;
            match(matched + 2);
            partner[b] = -1;
            adj[u][v] = adj[v][u] = 0;
        }
        partner[a] = -1;
    };
    match(0);
    long long per_graph = 1;
    for (int v = 0; v < n; ++v)
        per_graph *= 6; // 3!
    CHECK(simple_pairings % per_graph == 0);
    CHECK(count_labelled_regular(6, 3).count == static_cast<long>(simple_pairings / per_graph));
}
