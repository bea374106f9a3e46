#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partgen/analysis.hpp"
#include "partgen/composition.hpp"
#include "partgen/counting.hpp"
#include "partgen/generators.hpp"
#include "partgen/instrument.hpp"
#include "partgen/oracle.hpp"

/*
 * The invariant suite behind `partgen verify`. Every property compares the
 * library against an independent route: brute-force enumeration, the
 * pentagonal recurrence, the standalone succession rules, or the closed
 * forms. Properties whose cost grows quickly are capped below max_n; the
 * effective range is reported with each result.
 *
 * A mutation deliberately damages one generator's observable behaviour so
 * that the suite can be shown to catch it:
 *   drop-visit     the second visit is swallowed
 *   corrupt-parts  the second visited composition gets its first part bumped
 *   extra-read     one phantom read is reported at the first visit
 */

namespace partgen {

enum class mutation_kind { drop_visit, corrupt_parts, extra_read };

struct mutation {
    algo target;
    mutation_kind kind;
};

constexpr std::string_view name(mutation_kind k)
{
    switch (k) {
    case mutation_kind::drop_visit:    return "drop-visit";
    case mutation_kind::corrupt_parts: return "corrupt-parts";
    case mutation_kind::extra_read:    return "extra-read";
    }
    return "?";
}

// "accel-asc:drop-visit"
inline std::optional<mutation> parse_mutation(std::string_view s)
{
    const auto colon = s.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    auto a = parse_algo(s.substr(0, colon));
    if (!a)
        return std::nullopt;
    const auto kind = s.substr(colon + 1);
    for (auto k : {mutation_kind::drop_visit, mutation_kind::corrupt_parts, mutation_kind::extra_read})
        if (name(k) == kind)
            return mutation{*a, k};
    return std::nullopt;
}

struct property_result {
    std::string name;
    bool passed = true;
    std::int64_t checked_to = 0; // largest n covered
    std::string detail;          // first counterexample when failed
};

struct verify_report {
    std::vector<property_result> results;

    bool passed() const
    {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto& r : results)
            if (!r.passed)
                out.push_back(r.name);
        return out;
    }
};

namespace detail {

template <probe P>
class mutating_probe {
public:
    static constexpr bool enabled = true;

    mutating_probe(P& inner, bool phantom_read) : inner_(inner), phantom_(phantom_read) {}

    void read(std::size_t i) { inner_.read(i); }
    void write(std::size_t i) { inner_.write(i); }
    void init_write(std::size_t i) { inner_.init_write(i); }
    void invocation() { inner_.invocation(); }
    void taken(branch b) { inner_.taken(b); }
    void visited()
    {
        if (phantom_) {
            phantom_ = false;
            inner_.read(1);
        }
        inner_.visited();
    }

private:
    P& inner_;
    bool phantom_;
};

class verifier {
public:
    verifier(int max_n, std::optional<mutation> mut)
        : max_n_(max_n), mut_(mut), table_(count_table::build(std::max(max_n, 2) + 2))
    {
        // open() hands out references into results; they must stay put.
        report_.results.reserve(32);
    }

    verify_report run()
    {
        check_partition_numbers();
        check_brute_force_counts();
        check_generation();
        check_succession();
        check_lexmin();
        check_counters();
        check_tapes();
        check_identities();
        check_floor_lemma();
        return std::move(report_);
    }

private:
    using parts_list = std::vector<std::vector<part_t>>;

    std::int64_t cap(std::int64_t limit) const { return std::min<std::int64_t>(max_n_, limit); }

    property_result& open(std::string name, std::int64_t checked_to)
    {
        report_.results.push_back({std::move(name), true, checked_to, {}});
        return report_.results.back();
    }

    static void fail(property_result& r, std::string detail)
    {
        if (r.passed) {
            r.passed = false;
            r.detail = std::move(detail);
        }
    }

    bool mutated(algo a, mutation_kind k) const { return mut_ && mut_->target == a && mut_->kind == k; }

    template <probe P>
    std::uint64_t run_generator(algo a, std::int64_t n,
                                const std::function<void(std::span<const part_t>)>& visit, P& pr)
    {
        std::uint64_t seen = 0;
        std::vector<part_t> scratch;
        auto wrapped = [&](std::span<const part_t> parts) {
            ++seen;
            if (seen == 2 && mutated(a, mutation_kind::drop_visit))
                return;
            if (seen == 2 && mutated(a, mutation_kind::corrupt_parts)) {
                scratch.assign(parts.begin(), parts.end());
                scratch.front() += 1;
                visit(scratch);
                return;
            }
            visit(parts);
        };
        mutating_probe<P> mp(pr, mutated(a, mutation_kind::extra_read));
        return generate(generator_spec{a, n, std::nullopt}, wrapped, mp);
    }

    parts_list collect(algo a, std::int64_t n)
    {
        parts_list out;
        null_probe np;
        run_generator(a, n, [&](std::span<const part_t> p) { out.emplace_back(p.begin(), p.end()); }, np);
        return out;
    }

    op_counts count(algo a, std::int64_t n)
    {
        counting_probe cp;
        run_generator(a, n, [](std::span<const part_t>) {}, cp);
        return cp.counts();
    }

    static std::string show(const std::vector<part_t>& p) { return to_string(std::span<const part_t>(p)); }

    void check_partition_numbers()
    {
        const std::int64_t top = max_n_;
        auto& r = open("partition-numbers", top);
        const auto penta = oracle::pentagonal_p(static_cast<int>(top));
        for (std::int64_t n = 0; n <= top; ++n)
            if (table_.p(n) != penta[n])
                fail(r, "p(" + std::to_string(n) + ") differs from the pentagonal recurrence");
    }

    void check_brute_force_counts()
    {
        const std::int64_t top = cap(25);
        auto& r = open("brute-force-counts", top);
        for (std::int64_t n = 1; n <= top; ++n) {
            const auto all = oracle::partitions(static_cast<int>(n));
            for (std::int64_t m = 1; m <= n; ++m) {
                count_t first_at_least = 0, largest_exactly = 0;
                for (const auto& p : all) {
                    first_at_least += p.front() >= m;
                    largest_exactly += p.back() == m;
                }
                if (table_.nac(n, m) != first_at_least)
                    fail(r, "nac(" + std::to_string(n) + "," + std::to_string(m) + ")");
                if (table_.ndcf(n, m) != largest_exactly)
                    fail(r, "ndcf(" + std::to_string(n) + "," + std::to_string(m) + ")");
            }
        }
    }

    void check_generation()
    {
        const std::int64_t top = cap(40);
        auto& diff = open("differential-equivalence", top);
        auto& ord = open("order-contracts", top);
        auto& valid = open("visited-states-valid", top);
        for (std::int64_t n = 1; n <= top; ++n) {
            const auto expected = oracle::ascending_lex(static_cast<int>(n));
            for (algo a : all_algos) {
                auto seq = collect(a, n);
                const std::string where = std::string(name(a)) + " n=" + std::to_string(n);
                for (const auto& c : seq) {
                    try {
                        validate(c, order_of(a));
                    } catch (const error& e) {
                        fail(valid, where + ": " + show(c) + ": " + e.what());
                    }
                    std::int64_t sum = 0;
                    for (auto v : c)
                        sum += v;
                    if (sum != n)
                        fail(valid, where + ": " + show(c) + " does not sum to n");
                }
                for (std::size_t i = 1; i < seq.size(); ++i) {
                    const bool up = seq[i - 1] < seq[i];
                    if (up != emits_lexicographic(a) || seq[i - 1] == seq[i]) {
                        fail(ord, where + ": " + show(seq[i - 1]) + " then " + show(seq[i]));
                        break;
                    }
                }
                for (auto& c : seq)
                    std::sort(c.begin(), c.end());
                std::sort(seq.begin(), seq.end());
                if (seq.size() != static_cast<std::size_t>(table_.p(n)) || seq != expected)
                    fail(diff, where + ": " + std::to_string(seq.size()) + " compositions, p(n)="
                                   + to_string(table_.p(n)));
            }
        }
    }

    void check_succession()
    {
        const std::int64_t top = cap(25);
        auto& r = open("succession-conformance", top);
        for (std::int64_t n = 1; n <= top; ++n) {
            for (algo a : {algo::rule_asc, algo::rule_desc, algo::accel_asc, algo::accel_desc}) {
                const order o = order_of(a);
                const auto seq = collect(a, n);
                for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                    try {
                        const auto prev = validate(seq[i], o);
                        const auto next = o == order::ascending ? lexsucc_asc(prev) : lexsucc_desc(prev);
                        if (!std::ranges::equal(next.parts(), seq[i + 1])) {
                            fail(r, std::string(name(a)) + ": " + show(seq[i]) + " -> " + show(seq[i + 1]));
                            break;
                        }
                    } catch (const error& e) {
                        fail(r, std::string(name(a)) + ": " + show(seq[i]) + ": " + e.what());
                        break;
                    }
                }
            }
        }
    }

    void check_lexmin()
    {
        const std::int64_t top = cap(30);
        auto& r = open("lexmin-minimum", top);
        for (std::int64_t n = 1; n <= top; ++n) {
            const auto sorted = oracle::ascending_lex(static_cast<int>(n));
            for (std::int64_t m = 1; m <= n; ++m) {
                auto it = std::find_if(sorted.begin(), sorted.end(),
                                       [m](const auto& p) { return p.front() >= m; });
                const auto got = lexmin_asc(n, m);
                if (it == sorted.end() || !std::ranges::equal(got.parts(), *it))
                    fail(r, "lexmin_asc(" + std::to_string(n) + "," + std::to_string(m) + ")");
            }
        }
    }

    void check_counters()
    {
        const std::int64_t top = cap(50);
        auto& thm = open("counter-theorems", top);
        auto& lem = open("branch-lemmas", top);
        auto expect = [](property_result& r, std::string what, std::uint64_t got, count_t want) {
            if (static_cast<count_t>(got) != want)
                fail(r, what + ": measured " + std::to_string(got) + ", expected " + to_string(want));
        };
        for (std::int64_t n = 2; n <= top; ++n) {
            const std::string at = " n=" + std::to_string(n);
            for (algo a : all_algos) {
                const auto c = count(a, n);
                const auto f = closed_form(table_, a, n);
                const std::string who = std::string(name(a)) + at;
                if (f.reads)
                    expect(thm, who + " reads", c.reads, *f.reads);
                if (f.writes)
                    expect(thm, who + " writes", c.writes, *f.writes);
                if (f.invocations)
                    expect(thm, who + " invocations", c.invocations, *f.invocations);
                // The recursive listings never read the array.
                if (a == algo::rec_asc || a == algo::rec_desc)
                    expect(thm, who + " reads", c.reads, 0);

                const count_t p = table_.p(n), p2 = table_.p(n - 2);
                if (a == algo::accel_asc) {
                    expect(lem, who + " fast-path visits", c.branch_count_of(branch::accel_asc_visit_v), p2);
                    expect(lem, who + " terminal visits", c.branch_count_of(branch::accel_asc_visit_o), p - p2);
                }
                if (a == algo::accel_desc) {
                    expect(lem, who + " d_q=2 branch", c.branch_count_of(branch::accel_desc_q_dec), p2);
                    expect(lem, who + " q increments",
                           c.branch_count_of(branch::accel_desc_q_inc_e)
                               + c.branch_count_of(branch::accel_desc_q_inc_p),
                           p2 - 1);
                }
                if (a == algo::rule_desc)
                    expect(lem, who + " scan decrements", c.branch_count_of(branch::rule_desc_k_dec),
                           1 + table_.sum_p(n - 1) - static_cast<count_t>(n));
            }
        }
    }

    void check_tapes()
    {
        const std::int64_t top = cap(20);
        auto& r = open("tape-consistency", top);
        for (std::int64_t n = 2; n <= top; ++n) {
            for (algo a : all_algos) {
                counting_probe cp;
                tape_probe tp;
                run_generator(a, n, [](std::span<const part_t>) {}, cp);
                run_generator(a, n, [](std::span<const part_t>) {}, tp);
                tp.finish();
                std::uint64_t reads = 0, writes = 0;
                for (const auto& rec : tp.records()) {
                    const auto rd = rec.read_indices().size();
                    reads += rd;
                    writes += rec.write_indices().size();
                    for (const auto& op : rec.ops)
                        if (op.index < 1 || op.index > n)
                            fail(r, std::string(name(a)) + ": tape index out of range");
                    if (a == algo::rule_asc && rd != 2)
                        fail(r, "rule-asc record with " + std::to_string(rd) + " reads");
                    if (a == algo::accel_desc && rec.visit_index > 1 && rd < 1)
                        fail(r, "accel-desc transition without a read");
                }
                if (reads != cp.counts().reads || writes != cp.counts().writes)
                    fail(r, std::string(name(a)) + " n=" + std::to_string(n)
                                + ": tape rows disagree with counters");
            }
        }
    }

    void check_identities()
    {
        const std::int64_t top = cap(40);
        {
            auto& r = open("theorem-ntac", top);
            for (std::int64_t n = 3; n <= top; ++n)
                for (std::int64_t m = 1; m <= n / 2; ++m)
                    if (table_.ntac(n, m) != table_.nac(n, m) - table_.nac(n - 2, m))
                        fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
        {
            auto& cor = open("terminal-corollaries", top);
            auto& aw = open("identity-A027336", top);
            for (std::int64_t n = 1; n <= top; ++n) {
                count_t term = 0, nonterm = 0, wide = 0;
                for (const auto& p : oracle::partitions(static_cast<int>(n))) {
                    const std::size_t k = p.size();
                    const bool is_term = k == 1 || 2 * p[k - 2] <= p[k - 1];
                    (is_term ? term : nonterm) += 1;
                    // largest part y, second largest x, 2x > y
                    wide += k >= 2 && 2 * p[k - 2] > p[k - 1];
                }
                if (term != terminal_count(table_, n) || nonterm != nonterminal_count(table_, n))
                    fail(cor, "n=" + std::to_string(n));
                if (wide != table_.p(n - 2))
                    fail(aw, "n=" + std::to_string(n));
            }
        }
        {
            const std::int64_t ones_top = cap(25);
            auto& r = open("ones-total", ones_top);
            for (std::int64_t n = 1; n <= ones_top; ++n) {
                count_t ones = 0;
                for (const auto& p : oracle::partitions(static_cast<int>(n)))
                    ones += static_cast<count_t>(std::count(p.begin(), p.end(), 1));
                if (ones != ones_total(table_, n))
                    fail(r, "n=" + std::to_string(n));
            }
        }
        {
            auto& r = open("largest-parts-formula", top);
            for (std::int64_t n = 1; n <= top; ++n)
                if (pn_via_largest_parts(n) != table_.p(n))
                    fail(r, "n=" + std::to_string(n));
        }
    }

    void check_floor_lemma()
    {
        auto& r = open("floor-lemma", 60);
        for (std::int64_t x = 1; x <= 60; ++x)
            for (std::int64_t m = 1; m <= 60; ++m)
                for (std::int64_t n = 1; n <= 60; ++n) {
                    // floor((n - x)/m) with n - x possibly negative
                    const std::int64_t lhs_floor = (n - x) >= 0 ? (n - x) / m : -((x - n + m - 1) / m);
                    if ((x <= lhs_floor) != (x <= n / (m + 1)))
                        fail(r, "x=" + std::to_string(x) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
                }
    }

    int max_n_;
    std::optional<mutation> mut_;
    count_table table_;
    verify_report report_;
};

} // namespace detail

inline verify_report run_verification(int max_n, std::optional<mutation> mut = std::nullopt)
{
    if (max_n < 1)
        throw domain_error("max-n must be positive");
    if (max_n > 1000)
        throw domain_error("max-n above 1000 is outside the verification budget");
    return detail::verifier(max_n, mut).run();
}

} // namespace partgen
