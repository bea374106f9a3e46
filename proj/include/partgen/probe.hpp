#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <span>
#include <string_view>

#include "partgen/composition.hpp"

namespace partgen {

// Branch counters keyed to pseudocode lines of the generators. The string
// names follow the pseudocode line labels.
enum class branch {
    rule_asc_k_dec,     // rule-asc: k <- k - 1, once per visit
    rule_asc_k_inc,     // rule-asc: k <- k + 1, inner loop
    rule_desc_k_dec,    // rule-desc: right-to-left scan step
    rule_desc_k_inc,    // rule-desc: k <- k + 1, inner loop
    accel_asc_visit_v,  // accel-asc: visit inside the nonterminal loop
    accel_asc_visit_o,  // accel-asc: visit of a terminal composition
    accel_asc_k_dec,
    accel_asc_k_inc,
    accel_desc_q_dec,   // accel-desc: the d_q = 2 special case
    accel_desc_q_inc_e, // accel-desc: q <- q + 1 inside the general loop
    accel_desc_q_inc_p, // accel-desc: q <- q + 1 when n' > 1
};

inline constexpr std::size_t branch_count = 11;

inline constexpr std::array<std::string_view, branch_count> branch_names = {
    "rule-asc-k=k-1",   "rule-asc-k=k+1",     "rule-desc-k=k-1",    "rule-desc-k=k+1",
    "accel-asc-visit-v", "accel-asc-visit-o", "accel-asc-k=k-1",    "accel-asc-k=k+1",
    "accel-desc-q=q-1", "accel-desc-q=q+1-e", "accel-desc-q=q+1-p",
};

constexpr std::string_view name(branch b)
{
    return branch_names[static_cast<std::size_t>(b)];
}

/*
 * Instrumentation hooks called by the generators. Array positions are the
 * 1-based indices of the composition array. Operations belonging to the
 * initialisation lines are reported through init_write() so a probe can
 * decide whether they count.
 */
template <class P>
concept probe = requires(P& p, std::size_t i, branch b) {
    { P::enabled } -> std::convertible_to<bool>;
    p.read(i);
    p.write(i);
    p.init_write(i);
    p.invocation();
    p.taken(b);
    p.visited();
};

// Detached instrumentation. Every hook is an empty inline function, so a
// generator instantiated with null_probe compiles to the bare algorithm.
struct null_probe {
    static constexpr bool enabled = false;
    void read(std::size_t) noexcept {}
    void write(std::size_t) noexcept {}
    void init_write(std::size_t) noexcept {}
    void invocation() noexcept {}
    void taken(branch) noexcept {}
    void visited() noexcept {}
};

namespace detail {

// Composition array with 1-based indexing whose element accesses are
// reported to the probe. Loop-variable arithmetic stays outside it.
template <probe P>
class probed_array {
public:
    probed_array(std::span<part_t> storage, P& p) noexcept : a_(storage), probe_(p) {}

    part_t read(std::size_t i)
    {
        probe_.read(i);
        return a_[i];
    }

    void write(std::size_t i, part_t v)
    {
        probe_.write(i);
        a_[i] = v;
    }

    void init_write(std::size_t i, part_t v)
    {
        probe_.init_write(i);
        a_[i] = v;
    }

    // a_first ... a_last as a read-only view for the visitor.
    std::span<const part_t> view(std::size_t first, std::size_t last) const noexcept
    {
        return {a_.data() + first, last - first + 1};
    }

    P& probe() noexcept { return probe_; }

private:
    std::span<part_t> a_;
    P& probe_;
};

} // namespace detail

} // namespace partgen
