#include "queuelab/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace queuelab {

double kqueue_chain_constant()
{
    return 2.0 * std::exp(1.0) * kNestingConstant;
}

BoundReport compare_log(double lhs_log, double rhs_log)
{
    BoundReport r;
    r.lhs_log = lhs_log;
    r.rhs_log = rhs_log;
    r.slack_log = rhs_log - lhs_log;
    double tol = 1e-9 * std::max({1.0, std::fabs(lhs_log), std::fabs(rhs_log)});
    r.holds = r.slack_log >= -tol;
    return r;
}

double log_of_mpz(const mpz_class& value)
{
    if (value <= 0)
        throw std::invalid_argument("log_of_mpz: value must be positive");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

double regular_count_lower_bound_log(double n, double delta)
{
    if (n < 1 || delta < 1)
        throw std::invalid_argument("regular_count_lower_bound_log: need n, delta >= 1");
    return (delta * n / 2.0) * std::log(n / (3.0 * delta));
}

double kqueue_count_bound_log(double n, double m, double k, double c)
{
    if (n < 1 || m < 1 || c <= 0)
        throw std::invalid_argument("kqueue_count_bound_log: need n, m >= 1 and c > 0");
    if (k < 2.0 * m / n || k > m)
        throw std::invalid_argument("kqueue_count_bound_log: k outside 2m/n <= k <= m");
    return 2.0 * m * std::log(c * k * n / m);
}

double labelled_count_bound_log(long n, double m, double k, double c)
{
    return kqueue_count_bound_log(static_cast<double>(n), m, k, c) + log_factorial(n);
}

double log_factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("log_factorial: negative argument");
    double sum = 0.0;
    for (long i = 2; i <= n; ++i)
        sum += std::log(static_cast<double>(i));
    return sum;
}

double dujwoo_upper(double n, double delta)
{
    if (n < 1 || delta < 1)
        throw std::invalid_argument("dujwoo_upper: need n, delta >= 1");
    return std::exp(1.0) * std::sqrt(delta * n / 2.0);
}

double theorem_lower(double n, double delta, double c)
{
    if (delta < 3 || n < 1 || c <= 0)
        throw std::invalid_argument("theorem_lower: need delta >= 3, n >= 1, c > 0");
    return std::sqrt(delta) * std::pow(n, 0.5 - 1.0 / delta) / (std::sqrt(3.0) * c);
}

long long solve_min_k(long long n, int delta, double c, bool use_factorial)
{
    if (delta < 3 || n < 1 || c <= 0)
        throw std::invalid_argument("solve_min_k: need delta >= 3, n >= 1, c > 0");
    double lhs = regular_count_lower_bound_log(static_cast<double>(n), delta);
    if (lhs <= 0)
        return 1;
    double graphs_term =
        use_factorial ? log_factorial(n) : static_cast<double>(n) * std::log(static_cast<double>(n));
    auto rhs = [&](long long k) {
        return static_cast<double>(delta) * static_cast<double>(n) *
                   std::log(c * static_cast<double>(k) / delta) +
               graphs_term;
    };
    long long hi = 1;
    while (rhs(hi) < lhs) {
        hi *= 2;
        if (hi > (1LL << 62))
            throw std::runtime_error("solve_min_k: no solution in range");
    }
    long long lo = hi / 2 < 1 ? 1 : hi / 2;
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (rhs(mid) >= lhs)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BoundReport binom_bound_check(int n, int t)
{
    if (t < 1 || t > n)
        throw std::invalid_argument("binom_bound_check: need 1 <= t <= n");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(t));
    double rhs = t * (1.0 + std::log(static_cast<double>(n) / t));
    return compare_log(log_of_mpz(binom), rhs);
}

mpz_class partitions_at_most_k_parts(int m, int k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("partitions_at_most_k_parts: negative argument");
    // partitions into at most k parts = partitions into parts of size <= k
    std::vector<mpz_class> ways(m + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int total = part; total <= m; ++total)
            ways[total] += ways[total - part];
    return ways[m];
}

BoundReport partition_count_check(int m, int k)
{
    if (k < 1 || m < 1 || k > m)
        throw std::invalid_argument("partition_count_check: need 1 <= k <= m");
    mpz_class partitions = partitions_at_most_k_parts(m, k);
    mpz_class stars_bars, central, power;
    mpz_bin_uiui(stars_bars.get_mpz_t(), static_cast<unsigned long>(k + m - 1),
                 static_cast<unsigned long>(m));
    mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(2 * m),
                 static_cast<unsigned long>(m));
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));

    BoundReport report = compare_log(log_of_mpz(partitions), log_of_mpz(power));
    // the chain is checked exactly; the log fields just describe the extremes
    report.holds = partitions <= stars_bars && stars_bars < central && central < power;
    return report;
}

} // namespace queuelab
