#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "partgen/count.hpp"
#include "partgen/counting.hpp"
#include "partgen/error.hpp"
#include "partgen/generators.hpp"

namespace partgen {

// Exact operation totals predicted for a full run of one generator.
// Initialisation is excluded; absent fields carry no closed form.
struct op_prediction {
    std::optional<count_t> reads;
    std::optional<count_t> writes;
    std::optional<count_t> invocations;
};

// Smallest n for which the closed forms of an algorithm are stated.
constexpr std::int64_t closed_form_guard(algo a)
{
    switch (a) {
    case algo::rec_desc:
    case algo::accel_desc:
        return 2;
    default:
        return 1;
    }
}

inline op_prediction closed_form(const count_table& t, algo a, std::int64_t n)
{
    if (n < closed_form_guard(a))
        throw guard_violation(std::string(name(a)) + " closed forms hold for n >= "
                              + std::to_string(closed_form_guard(a)));
    detail::require_tabulated(t, n);
    const count_t p = t.p(n);
    const count_t p1 = t.p(n - 1);
    const count_t p2 = t.p(n - 2);
    op_prediction out;
    switch (a) {
    case algo::rec_asc:
        out.invocations = p;
        break;
    case algo::rec_desc:
        out.invocations = checked_add(p, p1);
        break;
    case algo::rule_asc:
        out.reads = 2 * p;
        out.writes = 2 * p - 1;
        break;
    case algo::rule_desc: {
        const count_t s = t.sum_p(n);
        out.reads = s - static_cast<count_t>(n);
        out.writes = s - 1;
        break;
    }
    case algo::accel_asc:
        out.reads = p - p2;
        out.writes = 2 * p - 1;
        break;
    case algo::accel_desc:
        out.reads = 2 * p - p2 - 2;
        out.writes = p + p2 - 2;
        break;
    }
    return out;
}

enum class algo_pair { recursive, accelerated };

constexpr std::string_view name(algo_pair p)
{
    return p == algo_pair::recursive ? "recursive" : "accel";
}

constexpr algo ascending_member(algo_pair p)
{
    return p == algo_pair::recursive ? algo::rec_asc : algo::accel_asc;
}

constexpr algo descending_member(algo_pair p)
{
    return p == algo_pair::recursive ? algo::rec_desc : algo::accel_desc;
}

/// Predicted running-time ratio (ascending / descending) for a pair:
///   recursive   p(n) / (p(n) + p(n-1))               invocation counts
///   accelerated (3p(n) - p(n-2)) / 3p(n)             read + write counts
inline double predicted_ratio(const count_table& t, algo_pair pair, std::int64_t n)
{
    if (n <= 1)
        throw guard_violation("ratio predictions hold for n > 1");
    detail::require_tabulated(t, n);
    const long double p = to_real(t.p(n));
    if (pair == algo_pair::recursive)
        return static_cast<double>(p / (p + to_real(t.p(n - 1))));
    return static_cast<double>((3 * p - to_real(t.p(n - 2))) / (3 * p));
}

/// Two-decimal presentation matching the reference ratio tables: the value is
/// rounded half-up one digit at a time from four places
/// (0.53447 -> 0.5345 -> 0.535 -> 0.54). Direct two-place rounding would give
/// 0.53 there, which disagrees with the tables.
inline double round_for_table(double x)
{
    const bool neg = x < 0;
    const long long four = std::llround(std::fabs(x) * 10000.0);
    const long long two = ((four + 5) / 10 + 5) / 10;
    return (neg ? -1.0 : 1.0) * static_cast<double>(two) / 100.0;
}

enum class ratio_basis { invocation_counts, read_write_counts, wall_clock };

struct ratio_report {
    std::int64_t n = 0;
    algo_pair pair = algo_pair::accelerated;
    ratio_basis basis = ratio_basis::read_write_counts;
    double predicted = 0.0;
    std::optional<double> measured;
};

inline ratio_report predict(const count_table& t, algo_pair pair, std::int64_t n)
{
    ratio_report r;
    r.n = n;
    r.pair = pair;
    r.basis = pair == algo_pair::recursive ? ratio_basis::invocation_counts
                                           : ratio_basis::read_write_counts;
    r.predicted = predicted_ratio(t, pair, n);
    return r;
}

struct avg_cost {
    algo kind;
    double reads;
    double writes;
};

// Approximate reads and writes per partition for the four succession-style
// generators, from the asymptotic forms of p(n).
inline std::array<avg_cost, 4> avg_cost_table(std::int64_t n)
{
    const double desc_rule = approx_ratio(approx_kind::sum_over_p, n);
    const double e2 = approx_ratio(approx_kind::pn_minus2_over_pn, n);
    return {{
        {algo::rule_asc, 2.0, 2.0},
        {algo::rule_desc, desc_rule, desc_rule},
        {algo::accel_asc, 1.0 - e2, 2.0},
        {algo::accel_desc, 1.0, 1.0 + e2},
    }};
}

} // namespace partgen
