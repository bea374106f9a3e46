#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "partgen/composition.hpp"
#include "partgen/count.hpp"
#include "partgen/error.hpp"

namespace partgen {

struct table_limits {
    // Largest n a table may be built for; three triangular tables of
    // 16-byte entries are kept, so 2000 is roughly 100 MB.
    int max_n = 2000;
};

/*
 * Memoized exact values of
 *   p(n)       partitions of n
 *   nac(n,m)   ascending compositions of n with first part >= m
 *   ntac(n,m)  terminal ascending compositions of n with first part >= m
 *   ndcf(n,m)  descending compositions of n with first part exactly m
 * for 1 <= m <= n <= max_n. Immutable after build().
 *
 * nac and ntac are the iterated sums
 *   nac(n,m)  = 1 + sum_{x=m}^{floor(n/2)} nac(n-x, x)
 *   ntac(n,m) = 1 + sum_{x=m}^{floor(n/3)} ntac(n-x, x)
 * accumulated from the top of the summation range downwards, so each entry
 * costs one addition. ndcf uses
 *   ndcf(n,m) = sum_{x=1}^{min(m,n-m)} ndcf(n-m, x),  ndcf(n,n) = ndcf(n,1) = 1
 * with a running prefix sum over x.
 */
class count_table {
public:
    static count_table build(int max_n, table_limits limits = {})
    {
        if (max_n < 1)
            throw domain_error("max_n must be positive");
        if (max_n > limits.max_n)
            throw capacity_error("max_n=" + std::to_string(max_n) + " exceeds the table budget of "
                                 + std::to_string(limits.max_n));
        count_table t(max_n);
        t.fill();
        return t;
    }

    int max_n() const noexcept { return max_n_; }

    // p(0) = 1 and p(x) = 0 for x < 0.
    count_t p(std::int64_t n) const
    {
        if (n < 0)
            return 0;
        if (n == 0)
            return 1;
        return nac(n, 1);
    }

    count_t nac(std::int64_t n, std::int64_t m) const
    {
        if (n == 0)
            return 1;
        check(n, m);
        return m > n ? 0 : nac_[index(n, m)];
    }

    count_t ntac(std::int64_t n, std::int64_t m) const
    {
        if (n == 0)
            return 1;
        check(n, m);
        return m > n ? 0 : ntac_[index(n, m)];
    }

    count_t ndcf(std::int64_t n, std::int64_t m) const
    {
        check(n, m);
        return m > n ? 0 : ndcf_[index(n, m)];
    }

    // sum_{x=1}^{n} p(x)
    count_t sum_p(std::int64_t n) const
    {
        count_t s = 0;
        for (std::int64_t x = 1; x <= n; ++x)
            s = checked_add(s, p(x));
        return s;
    }

private:
    explicit count_table(int max_n) : max_n_(max_n)
    {
        const auto size = static_cast<std::size_t>(max_n) * (max_n + 1) / 2;
        nac_.assign(size, 0);
        ntac_.assign(size, 0);
        ndcf_.assign(size, 0);
    }

    static std::size_t index(std::int64_t n, std::int64_t m)
    {
        return static_cast<std::size_t>(n * (n - 1) / 2 + (m - 1));
    }

    void check(std::int64_t n, std::int64_t m) const
    {
        if (n < 1 || m < 1)
            throw domain_error("counts are defined for positive n and m (n=" + std::to_string(n)
                               + ", m=" + std::to_string(m) + ")");
        if (n > max_n_)
            throw not_tabulated("n=" + std::to_string(n) + " is beyond the table (max_n="
                                + std::to_string(max_n_) + ")");
    }

    void fill()
    {
        // prefix[x] for the current row n-m: sum_{y=1}^{x} ndcf(n-m, y); rebuilt lazily per row.
        std::vector<std::vector<count_t>> ndcf_prefix(static_cast<std::size_t>(max_n_) + 1);
        for (std::int64_t n = 1; n <= max_n_; ++n) {
            count_t acc = 1;
            for (std::int64_t m = n; m >= 1; --m) {
                if (2 * m <= n)
                    acc = checked_add(acc, nac_[index(n - m, m)]);
                nac_[index(n, m)] = acc;
            }
            acc = 1;
            for (std::int64_t m = n; m >= 1; --m) {
                if (3 * m <= n)
                    acc = checked_add(acc, ntac_[index(n - m, m)]);
                ntac_[index(n, m)] = acc;
            }
            for (std::int64_t m = 1; m <= n; ++m) {
                count_t v;
                if (m == n || m == 1)
                    v = 1;
                else
                    v = ndcf_prefix[n - m][std::min(m, n - m)];
                ndcf_[index(n, m)] = v;
            }
            auto& pre = ndcf_prefix[n];
            pre.assign(static_cast<std::size_t>(n) + 1, 0);
            for (std::int64_t x = 1; x <= n; ++x)
                pre[x] = checked_add(pre[x - 1], ndcf_[index(n, x)]);
        }
    }

    int max_n_;
    std::vector<count_t> nac_;
    std::vector<count_t> ntac_;
    std::vector<count_t> ndcf_;
};

inline count_table build_tables(int max_n, table_limits limits = {})
{
    return count_table::build(max_n, limits);
}

namespace detail {

inline void require_tabulated(const count_table& t, std::int64_t n)
{
    if (n < 1)
        throw domain_error("n must be positive");
    if (n > t.max_n())
        throw not_tabulated("n=" + std::to_string(n) + " is beyond the table (max_n="
                            + std::to_string(t.max_n()) + ")");
}

} // namespace detail

/// Number of terminal ascending compositions of n, p(n) - p(n-2).
/// Cross-checked against the ntac recurrence; a mismatch is a logic error.
inline count_t terminal_count(const count_table& t, std::int64_t n)
{
    detail::require_tabulated(t, n);
    count_t closed = t.p(n) - t.p(n - 2);
    if (closed != t.ntac(n, 1))
        throw std::logic_error("terminal count disagrees with the ntac recurrence at n="
                               + std::to_string(n));
    return closed;
}

inline count_t nonterminal_count(const count_table& t, std::int64_t n)
{
    detail::require_tabulated(t, n);
    return t.p(n - 2);
}

/// Total number of parts equal to 1 across all partitions of n:
/// 1 + p(1) + ... + p(n-1).
inline count_t ones_total(const count_table& t, std::int64_t n)
{
    if (n < 1)
        throw domain_error("n must be positive");
    if (n - 1 > t.max_n())
        throw not_tabulated("ones_total(" + std::to_string(n) + ") needs p up to n-1");
    return checked_add(1, t.sum_p(n - 1));
}

/*
 * p(n) = (1 + n + S) / 2, S summing floor((a_{k-1} + a_k) / (a_{k-1} + 1))
 * over every ascending composition of n except <n>. The compositions are
 * walked with the standalone lexicographic succession rule.
 */
inline count_t pn_via_largest_parts(std::int64_t n)
{
    if (n < 1)
        throw domain_error("n must be positive");
    count_t sum = 0;
    composition c = lexmin_asc(n, 1);
    while (c.k() > 1) {
        auto a = c.parts();
        const std::int64_t x = a[c.k() - 2];
        const std::int64_t y = a[c.k() - 1];
        sum = checked_add(sum, static_cast<count_t>((x + y) / (x + 1)));
        c = lexsucc_asc(c);
    }
    const count_t total = checked_add(sum, static_cast<count_t>(1 + n));
    if (total % 2 != 0)
        throw std::logic_error("odd numerator in the largest-parts formula at n=" + std::to_string(n));
    return total / 2;
}

enum class approx_kind { sum_over_p, pn_minus2_over_pn, pn_minus1_over_pn };

/// Asymptotic approximations used to read the operation-count results:
///   sum_over_p        (1/p(n)) sum_{x<=n} p(x)  ~ 1 + sqrt(6n)/pi
///   pn_minus2_over_pn p(n-2)/p(n)                ~ exp(-2 pi / sqrt(6n))
///   pn_minus1_over_pn p(n-1)/p(n)                ~ exp(-pi / sqrt(6n))
inline double approx_ratio(approx_kind kind, std::int64_t n)
{
    if (n < 1)
        throw domain_error("n must be positive");
    const double r = std::sqrt(6.0 * static_cast<double>(n));
    switch (kind) {
    case approx_kind::sum_over_p:
        return 1.0 + r / std::numbers::pi;
    case approx_kind::pn_minus2_over_pn:
        return std::exp(-2.0 * std::numbers::pi / r);
    case approx_kind::pn_minus1_over_pn:
        return std::exp(-std::numbers::pi / r);
    }
    return 0.0;
}

} // namespace partgen
