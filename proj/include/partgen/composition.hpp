#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partgen/error.hpp"

namespace partgen {

using part_t = std::int32_t;

enum class order { ascending, descending };

constexpr std::string_view name(order o)
{
    return o == order::ascending ? "ascending" : "descending";
}

enum class terminal_class { terminal, nonterminal };

/*
 * An ascending (nondecreasing) or descending (nonincreasing) composition of n.
 * Instances are immutable values; the only way to build one is validate(),
 * which checks positivity and the order discipline and caches the sum.
 *
 * Parts are 1-indexed in documentation (a_1 ... a_k); part(j) follows that
 * convention while parts() exposes the underlying 0-based storage.
 */
class composition {
public:
    std::span<const part_t> parts() const noexcept { return parts_; }
    part_t part(std::size_t j) const { return parts_.at(j - 1); }
    std::size_t k() const noexcept { return parts_.size(); }
    std::int64_t n() const noexcept { return n_; }
    partgen::order order() const noexcept { return order_; }

    friend bool operator==(const composition& a, const composition& b)
    {
        return a.order_ == b.order_ && a.parts_ == b.parts_;
    }

    // Lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const composition& a, const composition& b)
    {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

    friend composition validate(std::vector<part_t> parts, partgen::order o);

private:
    composition(std::vector<part_t> parts, std::int64_t n, partgen::order o)
        : parts_(std::move(parts)), n_(n), order_(o)
    {
    }

    std::vector<part_t> parts_;
    std::int64_t n_;
    partgen::order order_;
};

inline composition validate(std::vector<part_t> parts, order o)
{
    if (parts.empty())
        throw empty_input();
    std::int64_t n = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < 1)
            throw domain_error("part " + std::to_string(j + 1) + " is not positive");
        if (j > 0) {
            bool ok = o == order::ascending ? parts[j - 1] <= parts[j] : parts[j - 1] >= parts[j];
            if (!ok)
                throw order_violation("parts " + std::to_string(j) + " and " + std::to_string(j + 1)
                                      + " break the " + std::string(name(o)) + " order");
        }
        n += parts[j];
    }
    return composition(std::move(parts), n, o);
}

inline composition validate(std::span<const part_t> parts, order o)
{
    return validate(std::vector<part_t>(parts.begin(), parts.end()), o);
}

inline std::string to_string(std::span<const part_t> parts, char sep = '+')
{
    std::string s;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j)
            s.push_back(sep);
        s += std::to_string(parts[j]);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const composition& c)
{
    return os << '<' << to_string(c.parts(), ',') << '>';
}

namespace detail {

// mu copies of m followed by n - mu*m, mu = floor(n/m) - 1.
inline void append_lexmin(std::vector<part_t>& out, std::int64_t n, std::int64_t m)
{
    std::int64_t mu = n / m - 1;
    for (std::int64_t i = 0; i < mu; ++i)
        out.push_back(static_cast<part_t>(m));
    out.push_back(static_cast<part_t>(n - mu * m));
}

} // namespace detail

/// Lexicographically least ascending composition of n whose first part is at least m.
inline composition lexmin_asc(std::int64_t n, std::int64_t m)
{
    if (m < 1 || m > n)
        throw domain_error("lexmin_asc requires 1 <= m <= n (n=" + std::to_string(n)
                           + ", m=" + std::to_string(m) + ")");
    std::vector<part_t> out;
    detail::append_lexmin(out, n, m);
    return validate(std::move(out), order::ascending);
}

/// Immediate lexicographic successor of an ascending composition.
/// The last composition <n> has none and raises no_successor.
inline composition lexsucc_asc(const composition& c)
{
    if (c.order() != order::ascending)
        throw domain_error("lexsucc_asc expects an ascending composition");
    const std::size_t k = c.k();
    if (k == 1)
        throw no_successor("<n> is the last ascending composition in lexicographic order");
    auto a = c.parts();
    std::int64_t m = a[k - 2] + 1;
    std::int64_t tail = std::int64_t{a[k - 2]} + a[k - 1];
    std::vector<part_t> out(a.begin(), a.end() - 2);
    detail::append_lexmin(out, tail, m);
    return validate(std::move(out), order::ascending);
}

/// Immediate successor of a descending composition in reverse lexicographic order.
/// The all-ones composition has none and raises no_successor.
inline composition lexsucc_desc(const composition& c)
{
    if (c.order() != order::descending)
        throw domain_error("lexsucc_desc expects a descending composition");
    auto d = c.parts();
    if (d[0] == 1)
        throw no_successor("1...1 is the last descending composition in reverse lexicographic order");
    const std::int64_t k = static_cast<std::int64_t>(c.k());
    std::int64_t q = k;
    while (d[q - 1] == 1)
        --q;
    const std::int64_t m = d[q - 1] - 1;
    const std::int64_t tail = d[q - 1] + k - q;
    const std::int64_t mu = tail / m - (tail % m == 0 ? 1 : 0);
    std::vector<part_t> out(d.begin(), d.begin() + (q - 1));
    for (std::int64_t i = 0; i < mu; ++i)
        out.push_back(static_cast<part_t>(m));
    if (tail - mu * m > 0)
        out.push_back(static_cast<part_t>(tail - mu * m));
    return validate(std::move(out), order::descending);
}

inline terminal_class classify(std::span<const part_t> a)
{
    const std::size_t k = a.size();
    if (k == 1 || 2 * std::int64_t{a[k - 2]} <= a[k - 1])
        return terminal_class::terminal;
    return terminal_class::nonterminal;
}

inline terminal_class classify(const composition& c)
{
    if (c.order() != order::ascending)
        throw domain_error("terminal classification applies to ascending compositions");
    return classify(c.parts());
}

inline composition reversed(const composition& c)
{
    std::vector<part_t> r(c.parts().rbegin(), c.parts().rend());
    return validate(std::move(r),
                    c.order() == order::ascending ? order::descending : order::ascending);
}

} // namespace partgen
