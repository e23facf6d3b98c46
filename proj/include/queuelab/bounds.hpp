#pragma once

#include <gmpxx.h>

namespace queuelab {

// Constants extracted from the counting arguments: the doubling step gives
// g(n) <= 121^n, and unwinding the k-queue chain with that value yields
// (2e*121 * kn/m)^(2m).
inline constexpr double kNestingConstant = 121.0;
double kqueue_chain_constant(); // 2 * e * 121

// Verdict of a log-space inequality lhs <= rhs. Holds only when the slack
// clears a 1e-9 relative guard, so borderline float noise never upgrades a
// failing bound.
struct BoundReport {
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double slack_log = 0.0;
    bool holds = false;
};

BoundReport compare_log(double lhs_log, double rhs_log);

// Natural log of a big integer (count >= 1).
double log_of_mpz(const mpz_class& value);

// ln of (n/(3*delta))^(delta*n/2), the lower bound on the number of
// labelled simple delta-regular n-vertex graphs.
double regular_count_lower_bound_log(double n, double delta);

// ln of (c*k*n/m)^(2m), the k-queue count bound. The lemma covers
// 2m/n <= k <= m; anything else is a domain error.
double kqueue_count_bound_log(double n, double m, double k, double c);

// ln of (c*k*n/m)^(2m) * n!, the labelled-graph corollary.
double labelled_count_bound_log(long n, double m, double k, double c);

// ln(n!) by direct summation; exact enough through n ~ 10^6.
double log_factorial(long n);

// e * sqrt(delta*n/2), the universal queue-number upper bound.
double dujwoo_upper(double n, double delta);

// sqrt(delta) * n^(1/2 - 1/delta) / (sqrt(3)*c), the existential lower bound.
double theorem_lower(double n, double delta, double c);

// Smallest positive integer k with
//   (n/(3*delta))^(delta*n/2) <= (c*k/delta)^(delta*n) * n^n,
// by monotone search in log space. Returns 1 when the left side is <= 1.
// With use_factorial the tighter n! variant replaces n^n.
long long solve_min_k(long long n, int delta, double c, bool use_factorial = false);

// Exact C(n,t) against (e*n/t)^t.
BoundReport binom_bound_check(int n, int t);

// Partitions of m into at most k parts (equivalently multisets of k
// non-negative integers summing to m).
mpz_class partitions_at_most_k_parts(int m, int k);

// Exact partition count against C(k+m-1, m) < C(2m, m) < 2^(2m). The
// report's verdict covers the whole chain; requires 1 <= k <= m.
BoundReport partition_count_check(int m, int k);

} // namespace queuelab
