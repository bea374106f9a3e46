#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "partgen/error.hpp"
#include "partgen/generators.hpp"
#include "partgen/probe.hpp"

namespace partgen {

// Operation tallies for one generator run.
struct op_counts {
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;
    std::uint64_t invocations = 0;
    std::uint64_t visits = 0;
    std::array<std::uint64_t, branch_count> branches{};
    bool include_init = false;

    std::uint64_t branch_count_of(branch b) const { return branches[static_cast<std::size_t>(b)]; }

    // Nonzero branch counters keyed by line label.
    std::map<std::string, std::uint64_t> branch_map() const
    {
        std::map<std::string, std::uint64_t> out;
        for (std::size_t i = 0; i < branch_count; ++i)
            if (branches[i])
                out.emplace(branch_names[i], branches[i]);
        return out;
    }
};

// reads=...,writes=...,invocations=...
inline std::string format_counts(const op_counts& c)
{
    return "reads=" + std::to_string(c.reads) + ",writes=" + std::to_string(c.writes)
        + ",invocations=" + std::to_string(c.invocations);
}

enum class op_kind : char { read = 'R', write = 'W' };

struct tape_op {
    op_kind kind;
    std::uint32_t index; // 1-based array position

    friend bool operator==(const tape_op&, const tape_op&) = default;
};

/*
 * Array operations performed since the previous visit, in chronological
 * order, closed by the visit with ordinal visit_index (1-based). Operations
 * after the final visit, made by the recursive generators while unwinding,
 * land in one extra record numbered visits + 1.
 */
struct tape_record {
    std::uint64_t visit_index = 0;
    std::vector<tape_op> ops;

    std::vector<std::uint32_t> read_indices() const { return select(op_kind::read); }
    std::vector<std::uint32_t> write_indices() const { return select(op_kind::write); }

private:
    std::vector<std::uint32_t> select(op_kind k) const
    {
        std::vector<std::uint32_t> out;
        for (const auto& op : ops)
            if (op.kind == k)
                out.push_back(op.index);
        return out;
    }
};

class counting_probe {
public:
    static constexpr bool enabled = true;

    explicit counting_probe(bool include_init = false) { counts_.include_init = include_init; }

    void read(std::size_t) noexcept { ++counts_.reads; }
    void write(std::size_t) noexcept { ++counts_.writes; }
    void init_write(std::size_t) noexcept
    {
        if (counts_.include_init)
            ++counts_.writes;
    }
    void invocation() noexcept { ++counts_.invocations; }
    void taken(branch b) noexcept { ++counts_.branches[static_cast<std::size_t>(b)]; }
    void visited() noexcept { ++counts_.visits; }

    const op_counts& counts() const noexcept { return counts_; }

private:
    op_counts counts_;
};

// Counts everything counting_probe does and also records the tape.
class tape_probe {
public:
    static constexpr bool enabled = true;

    explicit tape_probe(bool include_init = false) : counter_(include_init) {}

    void read(std::size_t i)
    {
        counter_.read(i);
        current_.push_back({op_kind::read, static_cast<std::uint32_t>(i)});
    }
    void write(std::size_t i)
    {
        counter_.write(i);
        current_.push_back({op_kind::write, static_cast<std::uint32_t>(i)});
    }
    void init_write(std::size_t i)
    {
        counter_.init_write(i);
        if (counter_.counts().include_init)
            current_.push_back({op_kind::write, static_cast<std::uint32_t>(i)});
    }
    void invocation() noexcept { counter_.invocation(); }
    void taken(branch b) noexcept { counter_.taken(b); }
    void visited()
    {
        counter_.visited();
        records_.push_back({counter_.counts().visits, std::move(current_)});
        current_.clear();
    }

    // Flushes operations made after the final visit.
    void finish()
    {
        if (!current_.empty()) {
            records_.push_back({counter_.counts().visits + 1, std::move(current_)});
            current_.clear();
        }
    }

    const op_counts& counts() const noexcept { return counter_.counts(); }
    const std::vector<tape_record>& records() const noexcept { return records_; }
    std::vector<tape_record> take_records() { return std::move(records_); }

private:
    counting_probe counter_;
    std::vector<tape_op> current_;
    std::vector<tape_record> records_;
};

static_assert(probe<null_probe>);
static_assert(probe<counting_probe>);
static_assert(probe<tape_probe>);

enum class instrument_mode { counts_only, full_tape };

/*
 * A single instrumented generator run. run() may be called once; a second
 * call raises already_started. Results are immutable afterwards.
 */
class instrumented_run {
public:
    instrumented_run(generator_spec spec, instrument_mode mode, bool include_init = false)
        : spec_(spec), mode_(mode), include_init_(include_init)
    {
    }

    template <class Visitor>
    const op_counts& run(Visitor&& visit)
    {
        if (started_)
            throw already_started();
        started_ = true;
        if (mode_ == instrument_mode::counts_only) {
            counting_probe p(include_init_);
            generate(spec_, visit, p);
            counts_ = p.counts();
        } else {
            tape_probe p(include_init_);
            generate(spec_, visit, p);
            p.finish();
            counts_ = p.counts();
            tape_ = p.take_records();
        }
        return counts_;
    }

    const op_counts& run()
    {
        return run([](std::span<const part_t>) {});
    }

    bool started() const noexcept { return started_; }
    const generator_spec& spec() const noexcept { return spec_; }
    instrument_mode mode() const noexcept { return mode_; }
    const op_counts& counts() const noexcept { return counts_; }
    const std::vector<tape_record>& tape() const noexcept { return tape_; }

private:
    generator_spec spec_;
    instrument_mode mode_;
    bool include_init_;
    bool started_ = false;
    op_counts counts_;
    std::vector<tape_record> tape_;
};

inline instrumented_run attach(generator_spec spec, instrument_mode mode, bool include_init = false)
{
    return instrumented_run(spec, mode, include_init);
}

// visit,kind,index with one row per operation in chronological order.
inline std::string tape_to_csv(std::span<const tape_record> tape)
{
    if (tape.empty())
        throw not_a_tape();
    std::string out = "visit,kind,index\n";
    for (const auto& rec : tape) {
        const std::string prefix = std::to_string(rec.visit_index) + ',';
        for (const auto& op : rec.ops) {
            out += prefix;
            out.push_back(static_cast<char>(op.kind));
            out.push_back(',');
            out += std::to_string(op.index);
            out.push_back('\n');
        }
    }
    return out;
}

inline std::string tape_to_csv(const instrumented_run& r)
{
    if (r.mode() != instrument_mode::full_tape || !r.started())
        throw not_a_tape();
    return tape_to_csv(r.tape());
}

} // namespace partgen
