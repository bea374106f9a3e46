#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "partgen/composition.hpp"
#include "partgen/count.hpp"
#include "partgen/error.hpp"

// Reference computations that share no code with the generators or the
// counting recurrences. Used by the test suites and by `verify`.

namespace partgen::oracle {

/// p(0..max_n) from Euler's pentagonal-number recurrence
///   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<count_t> pentagonal_p(int max_n)
{
    __extension__ typedef __int128 wide;
    std::vector<wide> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        wide s = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const wide sign = (k % 2) ? 1 : -1;
            s += sign * p[n - g1];
            if (g2 <= n)
                s += sign * p[n - g2];
        }
        if (s < 0)
            throw overflow_error("pentagonal recurrence overflowed");
        p[n] = s;
    }
    return {p.begin(), p.end()};
}

/*
 * Every partition of n as an ascending part list, found by choosing a
 * multiplicity for each part size from n down to 1. Output order is
 * whatever the search produces; callers sort as needed.
 */
inline std::vector<std::vector<part_t>> partitions(int n)
{
    std::vector<std::vector<part_t>> out;
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> choose = [&](int size, int remaining) {
        if (remaining == 0) {
            std::vector<part_t> parts;
            for (int v = 1; v <= n; ++v)
                parts.insert(parts.end(), static_cast<std::size_t>(mult[v]), v);
            out.push_back(std::move(parts));
            return;
        }
        if (size == 0)
            return;
        for (int c = remaining / size; c >= 0; --c) {
            mult[size] = c;
            choose(size - 1, remaining - c * size);
        }
        mult[size] = 0;
    };
    if (n >= 1)
        choose(n, n);
    return out;
}

/// Partitions of n as ascending compositions, sorted lexicographically.
inline std::vector<std::vector<part_t>> ascending_lex(int n)
{
    auto all = partitions(n);
    std::sort(all.begin(), all.end());
    return all;
}

/// Partitions of n as descending compositions, in reverse lexicographic order.
inline std::vector<std::vector<part_t>> descending_revlex(int n)
{
    auto all = partitions(n);
    for (auto& p : all)
        std::reverse(p.begin(), p.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

/// Every composition of n (2^(n-1) of them) filtered to the given order.
/// Exponential; a second, cruder oracle for small n.
inline std::vector<std::vector<part_t>> filtered_compositions(int n, order o)
{
    std::vector<std::vector<part_t>> out;
    if (n < 1)
        return out;
    const std::uint64_t cuts = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < cuts; ++mask) {
        std::vector<part_t> parts;
        part_t run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask >> i & 1) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        bool ok = o == order::ascending ? std::is_sorted(parts.begin(), parts.end())
                                        : std::is_sorted(parts.begin(), parts.end(), std::greater<>());
        if (ok)
            out.push_back(std::move(parts));
    }
    return out;
}

} // namespace partgen::oracle
