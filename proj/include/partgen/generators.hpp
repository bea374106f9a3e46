#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partgen/composition.hpp"
#include "partgen/error.hpp"
#include "partgen/probe.hpp"

/*
 * The six partition generators. Each one writes into a single parts buffer
 * allocated once per run and hands the visitor a read-only view of the live
 * prefix (no copy). Array indices are 1-based, as in the listings, so the
 * buffer holds n + 2 slots with slot 0 unused.
 *
 *   rec_asc    ascending compositions, lexicographic, recursive
 *   rec_desc   descending compositions, lexicographic, recursive
 *   rule_asc   ascending compositions, lexicographic, succession rule
 *   rule_desc  descending compositions, reverse lexicographic, succession rule
 *   accel_asc  ascending compositions, lexicographic, terminal/nonterminal fast path
 *   accel_desc descending compositions, reverse lexicographic, tracked q + d_q = 2 case
 *
 * The recursive generators recurse to depth at most n + 1.
 */

namespace partgen {

enum class algo { rec_asc, rec_desc, rule_asc, rule_desc, accel_asc, accel_desc };

inline constexpr std::array<algo, 6> all_algos = {
    algo::rec_asc, algo::rec_desc, algo::rule_asc, algo::rule_desc, algo::accel_asc, algo::accel_desc,
};

constexpr std::string_view name(algo a)
{
    switch (a) {
    case algo::rec_asc:    return "rec-asc";
    case algo::rec_desc:   return "rec-desc";
    case algo::rule_asc:   return "rule-asc";
    case algo::rule_desc:  return "rule-desc";
    case algo::accel_asc:  return "accel-asc";
    case algo::accel_desc: return "accel-desc";
    }
    return "?";
}

inline std::optional<algo> parse_algo(std::string_view s)
{
    for (algo a : all_algos)
        if (name(a) == s)
            return a;
    return std::nullopt;
}

// Order discipline of the compositions an algorithm emits.
constexpr order order_of(algo a)
{
    switch (a) {
    case algo::rec_asc:
    case algo::rule_asc:
    case algo::accel_asc:
        return order::ascending;
    default:
        return order::descending;
    }
}

// True when successive outputs increase lexicographically.
constexpr bool emits_lexicographic(algo a)
{
    return a != algo::rule_desc && a != algo::accel_desc;
}

struct generator_spec {
    algo kind = algo::accel_asc;
    std::int64_t n = 1;
    // rec_asc: smallest allowed first part (default 1).
    // rec_desc: when set, run the raw recursion with first part exactly m
    // instead of the all-partitions wrapper. Other algorithms reject it.
    std::optional<std::int64_t> m;
};

namespace detail {

inline void require_n(std::int64_t n)
{
    if (n < 1)
        throw domain_error("n must be positive (got " + std::to_string(n) + ")");
    if (n > 1'000'000)
        throw domain_error("n=" + std::to_string(n) + " is beyond any feasible enumeration");
}

inline std::vector<part_t> make_buffer(std::int64_t n)
{
    return std::vector<part_t>(static_cast<std::size_t>(n) + 2, 0);
}

template <probe P, class Visitor>
struct rec_asc_state {
    probed_array<P> a;
    Visitor& visit;
    std::uint64_t visits = 0;

    void run(std::int64_t n, std::int64_t m, std::size_t k)
    {
        a.probe().invocation();
        std::int64_t x = m;
        while (2 * x <= n) {
            a.write(k, static_cast<part_t>(x));
            run(n - x, x, k + 1);
            ++x;
        }
        a.write(k, static_cast<part_t>(n));
        a.probe().visited();
        ++visits;
        visit(a.view(1, k));
    }
};

// In wrapper mode the call is (2n, n, 1) and slot 1 holds the suppressed
// leading part n. Reported positions are then shifted down by one and
// accesses to the hidden slot are not reported at all.
template <probe P, class Visitor>
struct rec_desc_state {
    std::span<part_t> d;
    P& probe;
    Visitor& visit;
    std::size_t first;
    std::uint64_t visits = 0;

    void write(std::size_t i, part_t v)
    {
        if (i >= first)
            probe.write(i - first + 1);
        d[i] = v;
    }

    void run(std::int64_t n, std::int64_t m, std::size_t k)
    {
        probe.invocation();
        write(k, static_cast<part_t>(m));
        if (n == m || m == 1) {
            probe.visited();
            ++visits;
            const std::size_t last = k + static_cast<std::size_t>(n - m);
            visit(std::span<const part_t>(d.data() + first, last - first + 1));
            // Terminal visit with n = m > 1 leaves d_k = m behind, which breaks
            // the d_j = 1 (j > k) precondition of the caller's next sibling.
            if (m > 1)
                write(k, 1);
        } else {
            const std::int64_t top = std::min(m, n - m);
            for (std::int64_t x = 1; x <= top; ++x)
                run(n - m, x, k + 1);
            write(k, 1);
        }
    }
};

} // namespace detail

/// All ascending compositions of n with first part >= m, in lexicographic order.
template <class Visitor, probe P>
std::uint64_t rec_asc(std::int64_t n, std::int64_t m, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    if (m < 1 || m > n)
        throw domain_error("rec_asc requires 1 <= m <= n (n=" + std::to_string(n)
                           + ", m=" + std::to_string(m) + ")");
    auto buf = detail::make_buffer(n);
    detail::rec_asc_state<P, std::remove_reference_t<Visitor>> s{{buf, pr}, visit};
    s.run(n, m, 1);
    return s.visits;
}

/// Descending compositions of n whose first part is exactly m, in lexicographic order.
template <class Visitor, probe P>
std::uint64_t rec_desc_raw(std::int64_t n, std::int64_t m, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    if (m < 1 || m > n)
        throw domain_error("rec_desc requires 1 <= m <= n (n=" + std::to_string(n)
                           + ", m=" + std::to_string(m) + ")");
    auto buf = detail::make_buffer(n);
    for (std::size_t j = 2; j <= static_cast<std::size_t>(n); ++j) {
        pr.init_write(j);
        buf[j] = 1;
    }
    detail::rec_desc_state<P, std::remove_reference_t<Visitor>> s{buf, pr, visit, 1};
    s.run(n, m, 1);
    return s.visits;
}

/// All descending compositions of n in lexicographic order, via the
/// (2n, n, 1) invocation with the leading part suppressed at visit time.
template <class Visitor, probe P>
std::uint64_t rec_desc(std::int64_t n, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    auto buf = detail::make_buffer(n);
    // The listing requires d_j = 1 for every j > k on entry.
    for (std::size_t j = 2; j <= static_cast<std::size_t>(n) + 1; ++j) {
        pr.init_write(j - 1);
        buf[j] = 1;
    }
    detail::rec_desc_state<P, std::remove_reference_t<Visitor>> s{buf, pr, visit, 2};
    s.run(2 * n, n, 1);
    return s.visits;
}

template <class Visitor, probe P>
std::uint64_t rule_asc(std::int64_t n, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    auto buf = detail::make_buffer(n);
    detail::probed_array<P> a(buf, pr);

    std::size_t k = 2;
    a.init_write(1, 0);
    a.init_write(2, static_cast<part_t>(n));
    std::uint64_t visits = 0;
    while (k != 1) {
        std::int64_t y = a.read(k) - 1;
        --k;
        pr.taken(branch::rule_asc_k_dec);
        std::int64_t x = a.read(k) + 1;
        while (x <= y) {
            a.write(k, static_cast<part_t>(x));
            y -= x;
            ++k;
            pr.taken(branch::rule_asc_k_inc);
        }
        a.write(k, static_cast<part_t>(x + y));
        pr.visited();
        ++visits;
        visit(a.view(1, k));
    }
    return visits;
}

template <class Visitor, probe P>
std::uint64_t rule_desc(std::int64_t n, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    auto buf = detail::make_buffer(n);
    detail::probed_array<P> d(buf, pr);

    d.init_write(1, static_cast<part_t>(n));
    std::size_t k = 1;
    pr.visited();
    visit(d.view(1, 1));
    std::uint64_t visits = 1;
    while (k != static_cast<std::size_t>(n)) {
        const std::size_t l = k;
        std::int64_t m = d.read(k);
        while (m == 1) {
            --k;
            pr.taken(branch::rule_desc_k_dec);
            m = d.read(k);
        }
        std::int64_t rest = m + static_cast<std::int64_t>(l - k);
        --m;
        while (m < rest) {
            d.write(k, static_cast<part_t>(m));
            rest -= m;
            ++k;
            pr.taken(branch::rule_desc_k_inc);
        }
        d.write(k, static_cast<part_t>(rest));
        pr.visited();
        ++visits;
        visit(d.view(1, k));
    }
    return visits;
}

template <class Visitor, probe P>
std::uint64_t accel_asc(std::int64_t n, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    auto buf = detail::make_buffer(n);
    detail::probed_array<P> a(buf, pr);

    std::size_t k = 2;
    a.init_write(1, 0);
    std::int64_t y = n - 1;
    std::uint64_t visits = 0;
    while (k != 1) {
        --k;
        pr.taken(branch::accel_asc_k_dec);
        std::int64_t x = a.read(k) + 1;
        while (2 * x <= y) {
            a.write(k, static_cast<part_t>(x));
            y -= x;
            ++k;
            pr.taken(branch::accel_asc_k_inc);
        }
        const std::size_t l = k + 1;
        while (x <= y) {
            a.write(k, static_cast<part_t>(x));
            a.write(l, static_cast<part_t>(y));
            pr.taken(branch::accel_asc_visit_v);
            pr.visited();
            ++visits;
            visit(a.view(1, l));
            ++x;
            --y;
        }
        y = y + x - 1;
        a.write(k, static_cast<part_t>(y + 1));
        pr.taken(branch::accel_asc_visit_o);
        pr.visited();
        ++visits;
        visit(a.view(1, k));
    }
    return visits;
}

template <class Visitor, probe P>
std::uint64_t accel_desc(std::int64_t n, Visitor&& visit, P& pr)
{
    detail::require_n(n);
    auto buf = detail::make_buffer(n);
    detail::probed_array<P> d(buf, pr);

    std::size_t k = 1;
    // q indexes the rightmost part greater than 1; <1> has none.
    std::size_t q = n > 1 ? 1 : 0;
    for (std::size_t j = 2; j <= static_cast<std::size_t>(n); ++j)
        d.init_write(j, 1);
    d.init_write(1, static_cast<part_t>(n));
    pr.visited();
    visit(d.view(1, 1));
    std::uint64_t visits = 1;
    while (q != 0) {
        if (d.read(q) == 2) {
            ++k;
            d.write(q, 1);
            --q;
            pr.taken(branch::accel_desc_q_dec);
        } else {
            const std::int64_t m = d.read(q) - 1;
            std::int64_t rest = static_cast<std::int64_t>(k - q + 1);
            d.write(q, static_cast<part_t>(m));
            while (rest >= m) {
                ++q;
                pr.taken(branch::accel_desc_q_inc_e);
                d.write(q, static_cast<part_t>(m));
                rest -= m;
            }
            if (rest == 0) {
                k = q;
            } else {
                k = q + 1;
                if (rest > 1) {
                    ++q;
                    pr.taken(branch::accel_desc_q_inc_p);
                    d.write(q, static_cast<part_t>(rest));
                }
            }
        }
        pr.visited();
        ++visits;
        visit(d.view(1, k));
    }
    return visits;
}

/// Runs the generator described by spec, returning the number of visits.
template <class Visitor, probe P>
std::uint64_t generate(const generator_spec& spec, Visitor&& visit, P& pr)
{
    if (spec.m && spec.kind != algo::rec_asc && spec.kind != algo::rec_desc)
        throw domain_error(std::string(name(spec.kind)) + " takes no m parameter");
    switch (spec.kind) {
    case algo::rec_asc:    return rec_asc(spec.n, spec.m.value_or(1), visit, pr);
    case algo::rec_desc:
        return spec.m ? rec_desc_raw(spec.n, *spec.m, visit, pr) : rec_desc(spec.n, visit, pr);
    case algo::rule_asc:   return rule_asc(spec.n, visit, pr);
    case algo::rule_desc:  return rule_desc(spec.n, visit, pr);
    case algo::accel_asc:  return accel_asc(spec.n, visit, pr);
    case algo::accel_desc: return accel_desc(spec.n, visit, pr);
    }
    return 0;
}

template <class Visitor>
std::uint64_t generate(const generator_spec& spec, Visitor&& visit)
{
    null_probe p;
    return generate(spec, visit, p);
}

} // namespace partgen
