#include "queuelab/randreg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace queuelab {

bool degree_check(const LabelledGraph& g, int delta)
{
    if (!g.simple())
        return false;
    return g.is_regular(delta);
}

RegularSample gen_regular(int n, int delta, std::uint64_t seed, const GenRegularOptions& opts)
{
    if (n < 1 || delta < 0)
        throw std::invalid_argument("gen_regular: need n >= 1 and delta >= 0");
    if (delta >= n)
        throw std::invalid_argument("gen_regular: delta must be smaller than n");
    long long stubs = static_cast<long long>(n) * delta;
    if (stubs % 2 != 0)
        throw std::invalid_argument("gen_regular: n*delta must be even");

    SplitMix64 rng(seed);
    std::vector<int> stub(stubs);
    std::iota(stub.begin(), stub.end(), 0); // stub s belongs to vertex s/delta + 1

    RegularSample sample;
    sample.n = n;
    sample.delta = delta;
    sample.seed = seed;

    std::vector<OrderedEdge> edges(stubs / 2);
    for (std::uint64_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        for (int i = static_cast<int>(stubs) - 1; i > 0; --i) {
            int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(stub[i], stub[j]);
        }
        bool simple = true;
        edges.clear();
        for (int i = 0; i + 1 < stubs && simple; i += 2) {
            int u = stub[i] / delta + 1;
            int v = stub[i + 1] / delta + 1;
            if (u == v) {
                simple = false;
                break;
            }
            edges.push_back(normalize_edge(u, v));
        }
        if (simple) {
            std::sort(edges.begin(), edges.end());
            simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
        }
        if (simple) {
            sample.graph = LabelledGraph(n, std::move(edges), true);
            sample.rejections = attempt;
            return sample;
        }
    }
    throw std::runtime_error("gen_regular: rejection cap exceeded after " +
                             std::to_string(opts.max_attempts) + " attempts");
}

} // namespace queuelab
