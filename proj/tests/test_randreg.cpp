#include <doctest.h>

#include "queuelab/core.hpp"
#include "queuelab/randreg.hpp"

using namespace queuelab;

TEST_CASE("SplitMix64 matches the published reference outputs")
{
    // first outputs of the reference implementation for a few seeds,
    // computed independently
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xe220a8397b1dcdafULL);
    CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(zero.next() == 0x06c45d188009454fULL);

    SplitMix64 fortytwo(42);
    CHECK(fortytwo.next() == 0xbdd732262feb6e95ULL);
    CHECK(fortytwo.next() == 0x28efe333b266f103ULL);

    SplitMix64 big(1234567);
    CHECK(big.next() == 0x599ed017fb08fc85ULL);
    CHECK(big.next() == 0x2c73f08458540fa5ULL);
}

TEST_CASE("next_below stays in range and hits every residue")
{
    SplitMix64 rng(1);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t x = rng.next_below(5);
        REQUIRE(x < 5);
        ++seen[x];
    }
    for (int count : seen)
        CHECK(count > 100); // crude uniformity sanity
}

TEST_CASE("degree_check on the worked examples")
{
    LabelledGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(degree_check(k4, 3));
    LabelledGraph p3(3, {{1, 2}, {2, 3}});
    CHECK_FALSE(degree_check(p3, 2)); // endpoints have degree 1
    LabelledGraph c6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(degree_check(c6, 2));
}

TEST_CASE("gen_regular(4,3) is K4 for any seed")
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        RegularSample s = gen_regular(4, 3, seed);
        CHECK(s.graph.edges().size() == 6);
        CHECK(degree_check(s.graph, 3));
    }
}

TEST_CASE("gen_regular rejects odd stub counts and excessive degree")
{
    CHECK_THROWS_AS(gen_regular(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_regular(4, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_regular(4, 5, 0), std::invalid_argument);
}

TEST_CASE("samples are regular, simple, and deterministic")
{
    RegularSample a = gen_regular(6, 3, 42);
    CHECK(degree_check(a.graph, 3));
    RegularSample b = gen_regular(6, 3, 42);
    CHECK(to_text(a.graph) == to_text(b.graph));
    CHECK(a.rejections == b.rejections);

    RegularSample c = gen_regular(20, 3, 7);
    CHECK(degree_check(c.graph, 3));
}

TEST_CASE("rejection cap triggers on hopeless parameters")
{
    GenRegularOptions opts;
    opts.max_attempts = 1; // K4 via pairing usually needs a few tries
    bool threw = false;
    for (std::uint64_t seed = 0; seed < 64 && !threw; ++seed) {
        try {
            gen_regular(4, 3, seed, opts);
        } catch (const std::runtime_error&) {
            threw = true;
        }
    }
    CHECK(threw);
}

TEST_CASE("degree 0 yields the empty graph")
{
    RegularSample s = gen_regular(3, 0, 5);
    CHECK(s.graph.edges().empty());
    CHECK(degree_check(s.graph, 0));
}
