#pragma once

#include <cstdint>

#include "queuelab/core.hpp"

namespace queuelab {

// SplitMix64 (Vigna's public-domain reference algorithm). Chosen because it
// is tiny, fully specified by these three lines, and has well-known
// reference outputs, e.g. state 0 yields 0xe220a8397b1dcdaf first. All
// seeded randomness in this project flows through it, so results are
// reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejecting the partial block at the
    // bottom of the 64-bit range (no modulo bias).
    std::uint64_t next_below(std::uint64_t bound)
    {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

// True iff g is simple and every vertex has degree exactly delta.
bool degree_check(const LabelledGraph& g, int delta);

struct RegularSample {
    int n = 0;
    int delta = 0;
    std::uint64_t seed = 0;
    LabelledGraph graph;
    std::uint64_t rejections = 0; // pairings discarded for loops/parallel edges
};

struct GenRegularOptions {
    std::uint64_t max_attempts = 1'000'000;
};

// Uniform simple delta-regular graph via the pairing model: shuffle the
// n*delta half-edge stubs, pair them consecutively, and resample whenever
// the multigraph has a loop or parallel edge. Conditioning on simplicity
// keeps the distribution exactly uniform over labelled simple regular
// graphs. Requires n*delta even and delta < n; throws when the attempt cap
// is exceeded (parameters outside the model's practical regime).
RegularSample gen_regular(int n, int delta, std::uint64_t seed,
                          const GenRegularOptions& opts = {});

} // namespace queuelab
