#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "partgen/partgen.hpp"

namespace partgen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

namespace detail {

inline const std::map<std::string, algo>& algo_names()
{
    static const std::map<std::string, algo> m = [] {
        std::map<std::string, algo> out;
        for (algo a : all_algos)
            out.emplace(std::string(name(a)), a);
        return out;
    }();
    return m;
}

struct gen_args {
    algo kind = algo::accel_asc;
    std::int64_t n = 0;
    std::optional<std::int64_t> m;
    std::optional<std::uint64_t> limit;
    std::string sep = "+";
};

struct count_args {
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::string kind = "p";
};

struct verify_args {
    int max_n = 0;
    std::string mutate;
};

struct instrument_args {
    algo kind = algo::accel_asc;
    std::int64_t n = 0;
    bool include_init = false;
    bool branches = false;
    std::string tape;
};

struct bench_args {
    std::string pair;
    std::vector<std::int64_t> n_values;
    int reps = 5;
    int warmup = 1;
    std::string sink = "count";
};

inline int do_gen(const gen_args& g, std::ostream& out)
{
    if (g.sep.size() != 1)
        throw domain_error("--sep takes a single character");
    composition_stream s(generator_spec{g.kind, g.n, g.m});
    std::uint64_t emitted = 0;
    std::string line;
    while (auto parts = s.next()) {
        if (g.limit && emitted >= *g.limit)
            break;
        line = to_string(*parts, g.sep[0]);
        line.push_back('\n');
        out << line;
        ++emitted;
    }
    return exit_ok;
}

inline int do_count(const count_args& c, bool m_given, std::ostream& out)
{
    if (c.n < 1)
        throw domain_error("n must be positive");
    if (c.kind == "ndcf" && !m_given)
        throw domain_error("--kind ndcf requires an explicit --m");
    const auto t = build_tables(static_cast<int>(c.n));
    count_t v = 0;
    if (c.kind == "p")
        v = t.p(c.n);
    else if (c.kind == "nac")
        v = t.nac(c.n, c.m);
    else if (c.kind == "ndcf")
        v = t.ndcf(c.n, c.m);
    else if (c.kind == "ntac")
        v = t.ntac(c.n, c.m);
    else
        v = ones_total(t, c.n);
    out << to_string(v) << '\n';
    return exit_ok;
}

inline int do_verify(const verify_args& v, std::ostream& out)
{
    std::optional<mutation> mut;
    if (!v.mutate.empty()) {
        mut = parse_mutation(v.mutate);
        if (!mut)
            throw domain_error("unrecognised mutation '" + v.mutate + "' (expected ALGO:drop-visit|corrupt-parts|extra-read)");
        out << "mutation: " << name(mut->target) << ':' << name(mut->kind) << '\n';
    }
    const auto report = run_verification(v.max_n, mut);
    for (const auto& r : report.results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (n<=" << r.checked_to << ')';
        if (!r.passed)
            out << ": " << r.detail;
        out << '\n';
    }
    if (report.passed()) {
        out << "verify: all " << report.results.size() << " properties passed\n";
        return exit_ok;
    }
    const auto failed = report.failures();
    out << "verify: " << failed.size() << " failed:";
    for (const auto& f : failed)
        out << ' ' << f;
    out << '\n';
    return exit_failed;
}

inline int do_instrument(const instrument_args& a, std::ostream& out)
{
    const auto mode = a.tape.empty() ? instrument_mode::counts_only : instrument_mode::full_tape;
    auto r = attach(generator_spec{a.kind, a.n, std::nullopt}, mode, a.include_init);
    const auto& c = r.run();
    out << format_counts(c) << '\n';
    if (a.branches)
        for (const auto& [label, count] : c.branch_map())
            out << label << '=' << count << '\n';
    if (!a.tape.empty()) {
        const auto csv = tape_to_csv(r);
        if (a.tape == "-") {
            out << csv;
        } else {
            std::ofstream f(a.tape, std::ios::binary);
            if (!f)
                throw domain_error("cannot open tape file '" + a.tape + "'");
            f << csv;
        }
    }
    return exit_ok;
}

inline int do_bench(const bench_args& b, std::ostream& out)
{
    const algo_pair pair = b.pair == "recursive" ? algo_pair::recursive : algo_pair::accelerated;
    const bench_sink sink = b.sink == "count" ? bench_sink::count_only : bench_sink::checksum_parts;
    std::int64_t top = 2;
    for (auto n : b.n_values)
        top = std::max(top, n);
    const auto t = build_tables(static_cast<int>(top));
    std::vector<ratio_report> rows;
    for (auto n : b.n_values)
        rows.push_back(measure_ratio(t, pair, n, b.reps, b.warmup, sink));
    out << bench_csv(rows);
    return exit_ok;
}

} // namespace detail

/*
 * Entry point of the partgen command line. Exit status:
 *   0 success, 1 verification failures, 2 usage error, 3 domain error.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    using namespace detail;
    CLI::App app{"Integer partition generators: ascending vs descending compositions", "partgen"};
    app.require_subcommand(1);

    gen_args g;
    std::int64_t gen_m = 0;
    std::uint64_t gen_limit = 0;
    auto* gen = app.add_subcommand("gen", "Stream every composition of n, one per line");
    gen->add_option("--algo", g.kind, "Generator")
        ->required()
        ->transform(CLI::CheckedTransformer(algo_names(), CLI::ignore_case));
    gen->add_option("--n", g.n, "Integer to partition")->required();
    auto* gen_m_opt = gen->add_option("--m", gen_m, "rec-asc: smallest first part; rec-desc: exact first part");
    auto* gen_limit_opt = gen->add_option("--limit", gen_limit, "Stop after this many lines");
    gen->add_option("--sep", g.sep, "Part separator")->capture_default_str();

    count_args c;
    auto* count = app.add_subcommand("count", "Print an exact count");
    count->add_option("--n", c.n, "n")->required();
    auto* count_m = count->add_option("--m", c.m, "m (default 1; required for ndcf)");
    count->add_option("--kind", c.kind, "p | nac | ndcf | ntac | ones")
        ->check(CLI::IsMember({"p", "nac", "ndcf", "ntac", "ones"}))
        ->capture_default_str();

    verify_args v;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite up to max-n");
    verify->add_option("--max-n", v.max_n, "Largest n to check")->required();
    verify->add_option("--mutate", v.mutate, "Inject a fault, ALGO:drop-visit|corrupt-parts|extra-read");

    instrument_args ins;
    auto* instrument = app.add_subcommand("instrument", "Count array reads and writes of one run");
    instrument->add_option("--algo", ins.kind, "Generator")
        ->required()
        ->transform(CLI::CheckedTransformer(algo_names(), CLI::ignore_case));
    instrument->add_option("--n", ins.n, "Integer to partition")->required();
    instrument->add_flag("--include-init", ins.include_init, "Count initialisation writes too");
    instrument->add_flag("--branches", ins.branches, "Also print branch counters");
    instrument->add_option("--tape", ins.tape, "Write the read/write tape CSV to FILE ('-' for stdout)");

    bench_args b;
    auto* bench = app.add_subcommand("bench", "Time an ascending/descending pair");
    bench->add_option("--pair", b.pair, "recursive | accel")
        ->required()
        ->check(CLI::IsMember({"recursive", "accel"}));
    bench->add_option("--n", b.n_values, "Comma-separated n values")->required()->delimiter(',');
    bench->add_option("--reps", b.reps, "Repetitions (minimum is reported)")->capture_default_str();
    bench->add_option("--warmup", b.warmup, "Untimed warm-up runs")->capture_default_str();
    bench->add_option("--sink", b.sink, "count | checksum")
        ->check(CLI::IsMember({"count", "checksum"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return exit_ok;
        }
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*gen) {
            if (*gen_m_opt)
                g.m = gen_m;
            if (*gen_limit_opt)
                g.limit = gen_limit;
            return do_gen(g, out);
        }
        if (*count)
            return do_count(c, static_cast<bool>(*count_m), out);
        if (*verify)
            return do_verify(v, out);
        if (*instrument)
            return do_instrument(ins, out);
        if (*bench)
            return do_bench(b, out);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

} // namespace partgen::cli
