#include <doctest.h>

#include "oracles.hpp"
#include "queuelab/census.hpp"
#include "queuelab/rainbow.hpp"
#include "queuelab/randreg.hpp"

using namespace queuelab;

namespace {

OrderedGraph random_graph(int n, SplitMix64& rng, int max_edges = -1)
{
    auto cand = candidate_edges(n);
    std::vector<OrderedEdge> edges;
    for (const auto& e : cand)
        if (rng.next_below(2))
            edges.push_back(e);
    if (max_edges >= 0 && static_cast<int>(edges.size()) > max_edges)
        edges.resize(max_edges);
    return OrderedGraph(n, std::move(edges));
}

} // namespace

TEST_CASE("max_rainbow on the worked examples")
{
    CHECK(max_rainbow(OrderedGraph(4, {{1, 4}, {2, 3}})).size == 2);
    CHECK(max_rainbow(OrderedGraph(6, {{1, 6}, {2, 5}, {3, 4}})).size == 3);
    CHECK(max_rainbow(OrderedGraph(4, {{1, 2}, {1, 3}, {1, 4}})).size == 1);
    CHECK(max_rainbow(OrderedGraph(5, {{1, 5}, {1, 4}, {2, 3}, {2, 5}})).size == 2);
    CHECK(max_rainbow(OrderedGraph(3, {})).size == 0);
}

TEST_CASE("certificate is a valid chain of the reported size")
{
    SplitMix64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        OrderedGraph g = random_graph(n, rng);
        MaxRainbow result = max_rainbow(g);
        REQUIRE(static_cast<int>(result.certificate.edges.size()) == result.size);
        const auto& chain = result.certificate.edges;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            CHECK(is_nested(chain[i], chain[i + 1]));
        for (const auto& e : chain)
            CHECK(g.has_edge(e));
    }
}

TEST_CASE("certificate is the lexicographically smallest maximum chain")
{
    SplitMix64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        OrderedGraph g = random_graph(n, rng, 10);
        if (g.edges().empty())
            continue;
        auto expected = oracles::brute_lexmin_max_chain(g.edges());
        CHECK(max_rainbow(g).certificate.edges == expected);
    }
}

TEST_CASE("sweep agrees with the subset-enumeration oracle")
{
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        OrderedGraph g = random_graph(n, rng, 12);
        CHECK(max_rainbow_size(g.edges()) == oracles::brute_max_rainbow(g.edges()));
    }
}

TEST_CASE("adding an edge never decreases the max rainbow")
{
    SplitMix64 rng(5150);
    int done = 0;
    while (done < 10000) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        OrderedGraph g = random_graph(n, rng);
        auto cand = candidate_edges(n);
        OrderedEdge extra = cand[rng.next_below(cand.size())];
        if (g.has_edge(extra))
            continue;
        auto edges = g.edges();
        int before = max_rainbow_size(edges);
        edges.push_back(extra);
        CHECK(max_rainbow_size(edges) >= before);
        ++done;
    }
}

TEST_CASE("max rainbow is invariant under order reversal")
{
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        OrderedGraph g = random_graph(n, rng);
        CHECK(max_rainbow(g).size == max_rainbow(g.reversed()).size);
    }
}

TEST_CASE("nesting depths on the worked examples")
{
    // edges come back in canonical order: (1,6),(2,5),(3,4)
    CHECK(nesting_depths(OrderedGraph(6, {{1, 6}, {2, 5}, {3, 4}})) ==
          std::vector<int>{3, 2, 1});
    CHECK(nesting_depths(OrderedGraph(4, {{1, 2}, {2, 3}, {3, 4}})) ==
          std::vector<int>{1, 1, 1});
    // canonical order (1,5),(2,3),(2,4)
    CHECK(nesting_depths(OrderedGraph(5, {{1, 5}, {2, 3}, {2, 4}})) ==
          std::vector<int>{2, 1, 1});
}

TEST_CASE("depth maxima equal the rainbow size")
{
    SplitMix64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        OrderedGraph g = random_graph(n, rng);
        auto depths = nesting_depths(g);
        int expected = max_rainbow_size(g.edges());
        int maximum = 0;
        for (int d : depths)
            maximum = std::max(maximum, d);
        CHECK(maximum == expected);
    }
}

TEST_CASE("greedy partition on the worked examples")
{
    {
        QueueAssignment a = greedy_partition(OrderedGraph(6, {{1, 6}, {2, 5}, {3, 4}}));
        CHECK(a.queue_count == 3);
        CHECK(a.queue_of == std::vector<int>{3, 2, 1});
    }
    {
        QueueAssignment a = greedy_partition(OrderedGraph(3, {}));
        CHECK(a.queue_count == 0);
        CHECK(a.queue_of.empty());
    }
    {
        // canonical order (1,4),(1,5),(2,3),(2,5)
        QueueAssignment a =
            greedy_partition(OrderedGraph(5, {{1, 5}, {1, 4}, {2, 3}, {2, 5}}));
        CHECK(a.queue_count == 2);
        CHECK(a.queue_of == std::vector<int>{2, 2, 1, 1});
    }
}

TEST_CASE("greedy partition validates on every graph up to n = 5")
{
    for (int n = 1; n <= 5; ++n) {
        auto cand = candidate_edges(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
            std::vector<OrderedEdge> edges;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(cand[i]);
            OrderedGraph g(n, std::move(edges));
            QueueAssignment a = greedy_partition(g);
            REQUIRE(validate_assignment(a));
            REQUIRE(a.queue_count == max_rainbow_size(g.edges()));
        }
    }
}

TEST_CASE("validate_assignment rejects a nested pair in one queue")
{
    OrderedGraph g(4, {{1, 4}, {2, 3}});
    QueueAssignment bad{g, {1, 1}, 1};
    CHECK_FALSE(validate_assignment(bad));
    QueueAssignment good{g, {1, 2}, 2};
    CHECK(validate_assignment(good));
    QueueAssignment incomplete{g, {1}, 1};
    CHECK_FALSE(validate_assignment(incomplete));
}

TEST_CASE("loops participate in depths but never nest each other")
{
    OrderedGraph g(3, {{1, 3}, {2, 2}});
    CHECK(max_rainbow(g).size == 2);
    OrderedGraph loops(3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(max_rainbow(loops).size == 1);
}
