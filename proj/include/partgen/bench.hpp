#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "partgen/analysis.hpp"
#include "partgen/counting.hpp"
#include "partgen/generators.hpp"

namespace partgen {

// What the timed visitor does with each composition. Both keep a value
// alive past the run so the generator body cannot be optimised away.
enum class bench_sink {
    count_only,     // visit count xor-folded with the length, O(1) per visit
    checksum_parts, // every part xor-accumulated, O(k) per visit
};

struct bench_config {
    std::vector<algo> algos;
    std::vector<std::int64_t> n_values;
    int repetitions = 5; // minimum over repetitions is reported
    int warmup = 1;
    bench_sink sink = bench_sink::count_only;
};

struct bench_timing {
    algo kind;
    std::int64_t n;
    double min_seconds;
    std::uint64_t visits;
    std::uint64_t checksum;
};

namespace detail {

struct count_sink {
    std::uint64_t acc = 0;
    void operator()(std::span<const part_t> parts) noexcept { acc = (acc + 1) ^ parts.size(); }
};

struct checksum_sink {
    std::uint64_t acc = 0;
    void operator()(std::span<const part_t> parts) noexcept
    {
        for (part_t v : parts)
            acc ^= static_cast<std::uint64_t>(v);
        acc = std::rotl(acc, 1);
    }
};

// Makes v observable to the optimiser without emitting any instruction.
inline void escape(std::uint64_t v)
{
    asm volatile("" : : "r"(v) : "memory");
}

template <class Sink>
double time_once(const generator_spec& spec, bench_timing& out)
{
    Sink s;
    null_probe np;
    const auto t0 = std::chrono::steady_clock::now();
    const auto visits = generate(spec, s, np);
    const auto t1 = std::chrono::steady_clock::now();
    escape(s.acc);
    out.visits = visits;
    out.checksum = s.acc;
    return std::chrono::duration<double>(t1 - t0).count();
}

// Times each algorithm of the list once per round, round-robin, so that
// every contender sees the same machine conditions. Minimum per algorithm.
template <class Sink>
std::vector<bench_timing> time_round_robin(const std::vector<algo>& algos, std::int64_t n, int reps, int warmup)
{
    std::vector<bench_timing> out;
    for (algo a : algos)
        out.push_back({a, n, std::numeric_limits<double>::infinity(), 0, 0});
    for (int i = 0; i < warmup + reps; ++i)
        for (auto& t : out) {
            const double secs = time_once<Sink>(generator_spec{t.kind, n, std::nullopt}, t);
            if (i >= warmup)
                t.min_seconds = std::min(t.min_seconds, secs);
        }
    return out;
}

inline std::vector<bench_timing> time_round_robin(const std::vector<algo>& algos, std::int64_t n, int reps,
                                                  int warmup, bench_sink sink)
{
    if (reps < 1)
        throw domain_error("repetitions must be at least 1");
    if (warmup < 0)
        throw domain_error("warmup must be nonnegative");
    return sink == bench_sink::count_only ? time_round_robin<count_sink>(algos, n, reps, warmup)
                                          : time_round_robin<checksum_sink>(algos, n, reps, warmup);
}

} // namespace detail

inline bench_timing time_generator(algo a, std::int64_t n, int reps, int warmup, bench_sink sink)
{
    return detail::time_round_robin({a}, n, reps, warmup, sink).front();
}

// For each n, the algorithms take turns within every repetition; runs are
// strictly sequential.
inline std::vector<bench_timing> run_bench(const bench_config& cfg)
{
    std::vector<bench_timing> out;
    for (auto n : cfg.n_values) {
        const auto rows = detail::time_round_robin(cfg.algos, n, cfg.repetitions, cfg.warmup, cfg.sink);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

/// Predicted and measured (ascending / descending) time ratio for a pair.
inline ratio_report measure_ratio(const count_table& t, algo_pair pair, std::int64_t n, int reps,
                                  int warmup = 1, bench_sink sink = bench_sink::count_only)
{
    ratio_report r = predict(t, pair, n);
    const auto rows = detail::time_round_robin({ascending_member(pair), descending_member(pair)}, n, reps,
                                               warmup, sink);
    r.basis = ratio_basis::wall_clock;
    r.measured = rows[0].min_seconds / rows[1].min_seconds;
    return r;
}

// n,predicted,measured with the prediction in table presentation.
inline std::string bench_csv(const std::vector<ratio_report>& rows)
{
    std::string out = "n,predicted,measured\n";
    char buf[96];
    for (const auto& r : rows) {
        if (r.measured)
            std::snprintf(buf, sizeof buf, "%lld,%.2f,%.4f\n", static_cast<long long>(r.n),
                          round_for_table(r.predicted), *r.measured);
        else
            std::snprintf(buf, sizeof buf, "%lld,%.2f,\n", static_cast<long long>(r.n),
                          round_for_table(r.predicted));
        out += buf;
    }
    return out;
}

} // namespace partgen
