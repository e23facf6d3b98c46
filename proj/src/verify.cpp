#include "queuelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "queuelab/bounds.hpp"
#include "queuelab/census.hpp"
#include "queuelab/layout.hpp"
#include "queuelab/rainbow.hpp"
#include "queuelab/randreg.hpp"

namespace queuelab {

int min_nesting_free_partition(const std::vector<OrderedEdge>& edges)
{
    if (edges.empty())
        return 0;
    int m = static_cast<int>(edges.size());
    std::vector<int> cls(m, 0);
    std::function<bool(int, int, int)> color = [&](int i, int k, int used) -> bool {
        if (i == m)
            return true;
        int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int j = 0; j < i && !clash; ++j)
                if (cls[j] == c && are_nested(edges[i], edges[j]))
                    clash = true;
            if (clash)
                continue;
            cls[i] = c;
            if (color(i + 1, k, std::max(used, c)))
                return true;
        }
        cls[i] = 0;
        return false;
    };
    for (int k = 1;; ++k)
        if (color(0, k, 0))
            return k;
}

namespace {

// Uniformly random edge subset of the candidate set, used for the sampled
// part of the equivalence check.
OrderedGraph random_subgraph(int n, SplitMix64& rng)
{
    auto cand = candidate_edges(n);
    std::vector<OrderedEdge> edges;
    std::uint64_t mask = rng.next() & ((std::uint64_t{1} << cand.size()) - 1);
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1)
            edges.push_back(cand[i]);
    return OrderedGraph(n, std::move(edges));
}

void for_each_subset_graph(int n, const std::function<void(const OrderedGraph&)>& visit)
{
    auto cand = candidate_edges(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
        std::vector<OrderedEdge> edges;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(cand[i]);
        visit(OrderedGraph(n, std::move(edges)));
    }
}

struct Checker {
    std::vector<CheckResult> results;
    std::ostream* progress;

    void add(const std::string& name, bool ok, const std::string& detail)
    {
        results.push_back({name, ok, detail});
        if (progress)
            (*progress) << (ok ? "ok   " : "FAIL ") << name
                        << (detail.empty() ? "" : " " + detail) << '\n';
    }
};

} // namespace

std::vector<CheckResult> verify_lemmas(int max_n, std::ostream* progress)
{
    Checker checker{{}, progress};

    // Rainbow equivalence and greedy validity: min partition == max rainbow,
    // exhaustively for n <= 4 and sampled at n = 5.
    {
        bool equal = true, greedy_ok = true;
        long checked = 0;
        std::string counterexample;
        auto inspect = [&](const OrderedGraph& g) {
            if (!equal || !greedy_ok)
                return;
            ++checked;
            int sweep = max_rainbow_size(g.edges());
            if (min_nesting_free_partition(g.edges()) != sweep) {
                equal = false;
                counterexample = to_text(g);
                return;
            }
            auto assignment = greedy_partition(g);
            if (!validate_assignment(assignment) || assignment.queue_count != sweep) {
                greedy_ok = false;
                counterexample = to_text(g);
            }
        };
        for (int n = 1; n <= std::min(max_n, 4); ++n)
            for_each_subset_graph(n, inspect);
        if (max_n >= 5) {
            SplitMix64 rng(20260810);
            for (int i = 0; i < 2000; ++i)
                inspect(random_subgraph(5, rng));
        }
        std::ostringstream detail;
        detail << checked << " graphs";
        checker.add("rainbow-equivalence", equal,
                    equal ? detail.str() : "counterexample " + counterexample);
        checker.add("greedy-partition-valid", greedy_ok,
                    greedy_ok ? detail.str() : "counterexample " + counterexample);
    }

    // Edge-count lemma: the maximum nesting-free graph has exactly 2n-1 edges
    // (the witness sum check lives inside max_queue_edges).
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= std::min(max_n, 5); ++n) {
            auto result = max_queue_edges(n);
            if (result.max_edges != 2 * n - 1) {
                ok = false;
                detail = "n=" + std::to_string(n) + " gave " + std::to_string(result.max_edges);
                break;
            }
        }
        checker.add("edges-lemma", ok, ok ? "max = 2n-1 for n <= 5" : detail);
    }

    // Doubling pattern counts.
    {
        auto nonloop = doubling_patterns(false);
        auto loop = doubling_patterns(true);
        bool ok = nonloop.size() == 11 && loop.size() == 7;
        checker.add("doubling-patterns", ok,
                    std::to_string(nonloop.size()) + " non-loop, " +
                        std::to_string(loop.size()) + " loop");
    }

    // Doubling recurrence g(2n) <= 11^(2n-1) g(n) plus quotient facts.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; 2 * n <= std::min(2 * max_n, 6); ++n) {
            auto report = verify_doubling(n);
            if (!report.ok()) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + report.counterexample;
                break;
            }
            if (!detail.empty())
                detail += ", ";
            detail += "g(" + std::to_string(2 * n) + ")=" + report.g_2n.get_str();
        }
        checker.add("doubling-recurrence", ok, detail);
    }

    // g(n) <= 121^n.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            mpz_class g = enumerate_queues(n);
            mpz_class bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), 121, static_cast<unsigned long>(n));
            if (g > bound) {
                ok = false;
                detail = "n=" + std::to_string(n);
                break;
            }
        }
        checker.add("nested-count-bound", ok, ok ? "g(n) <= 121^n" : detail);
    }

    // g(n,m) against the two-case bound.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= std::min(max_n, 5) && ok; ++n) {
            auto table = queues_by_edges_table(n);
            for (int m = 0; m < static_cast<int>(table.size()) && ok; ++m) {
                mpz_class bound;
                if (2 * m <= n) {
                    mpz_class binom, power;
                    mpz_bin_uiui(binom.get_mpz_t(), n, 2 * m);
                    mpz_ui_pow_ui(power.get_mpz_t(), 121, static_cast<unsigned long>(2 * m));
                    bound = binom * power;
                } else {
                    mpz_ui_pow_ui(bound.get_mpz_t(), 121, static_cast<unsigned long>(n));
                }
                if (table[m] > bound) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
        }
        checker.add("edges-count-bound", ok, ok ? "g(n,m) within case split" : detail);
    }

    // g(n,m,k) against (c k n / m)^(2m) with the proof-extracted constant.
    {
        bool ok = true;
        std::string detail;
        double c = kqueue_chain_constant();
        for (int n = 1; n <= std::min(max_n, 5) && ok; ++n) {
            int total = n * (n + 1) / 2;
            for (int m = 1; m <= total && ok; ++m) {
                int k_low = (2 * m + n - 1) / n;
                for (int k = std::max(1, k_low); k <= m && ok; ++k) {
                    mpz_class count = count_kqueues(n, m, k);
                    if (count == 0)
                        continue;
                    auto report =
                        compare_log(log_of_mpz(count), kqueue_count_bound_log(n, m, k, c));
                    if (!report.holds) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                 " k=" + std::to_string(k);
                    }
                }
            }
        }
        checker.add("kqueue-count-bound", ok, ok ? "g(n,m,k) within chain bound" : detail);
    }

    // Labelled corollary: count <= g(n,m,k) * n! and the closed form.
    {
        bool ok = true;
        std::string detail;
        double c = kqueue_chain_constant();
        for (int n = 2; n <= std::min(max_n, 5) && ok; ++n) {
            int pairs = n * (n - 1) / 2;
            mpz_class factorial;
            mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
            for (int m = 1; m <= pairs && ok; ++m) {
                for (int k = 1; k <= m && ok; ++k) {
                    mpz_class labelled = count_labelled_qn_le(n, m, k); // checks * n! itself
                    if (labelled == 0)
                        continue;
                    if (2.0 * m / n <= k) {
                        auto report = compare_log(log_of_mpz(labelled),
                                                  labelled_count_bound_log(n, m, k, c));
                        if (!report.holds) {
                            ok = false;
                            detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                     " k=" + std::to_string(k);
                        }
                    }
                }
            }
        }
        checker.add("labelled-corollary", ok, ok ? "counts within n! corollary" : detail);
    }

    // Regular census sanity and its stated lower bound (reported, not failed,
    // when the bound exceeds the count at small n).
    {
        auto k4 = count_labelled_regular(4, 3);
        auto odd = count_labelled_regular(5, 3);
        auto cubic6 = count_labelled_regular(6, 3);
        bool ok = k4.count == 1 && odd.odd_parity && odd.count == 0 && cubic6.count == 70;
        std::string detail = "count(6,3)=" + cubic6.count.get_str();
        double bound_log = regular_count_lower_bound_log(6, 3);
        if (cubic6.count > 0 && log_of_mpz(cubic6.count) < bound_log)
            detail += " below stated lower bound (small n)";
        checker.add("regular-census", ok, detail);
    }

    // Binomial bound sweep.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 60 && ok; ++n)
            for (int t = 1; t <= n && ok; ++t)
                if (!binom_bound_check(n, t).holds) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " t=" + std::to_string(t);
                }
        checker.add("binom-bound-sweep", ok, ok ? "n <= 60" : detail);
    }

    // Partition count sweep.
    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 12 && ok; ++m)
            for (int k = 1; k <= m && ok; ++k)
                if (!partition_count_check(m, k).holds) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                }
        checker.add("partition-count-sweep", ok, ok ? "m <= 12" : detail);
    }

    // Theorem algebra: the integer solution tracks the closed form.
    {
        bool ok = true;
        std::string detail;
        for (int delta : {3, 4, 5, 10}) {
            for (long long n : {100LL, 1000LL, 10000LL}) {
                for (double c : {1.0, 121.0}) {
                    double closed = theorem_lower(static_cast<double>(n), delta, c);
                    long long solved = solve_min_k(n, delta, c);
                    double diff = std::fabs(static_cast<double>(solved) - closed);
                    if (diff > 1.0 + 1e-6 * closed) {
                        ok = false;
                        detail = "delta=" + std::to_string(delta) + " n=" + std::to_string(n) +
                                 " c=" + std::to_string(c);
                    }
                }
            }
        }
        checker.add("theorem-algebra", ok, ok ? "solve_min_k tracks closed form" : detail);
    }

    return checker.results;
}

} // namespace queuelab
