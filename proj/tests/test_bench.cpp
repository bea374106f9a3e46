#include "support.hpp"

using namespace partgen;

TEST_CASE("timing reports the minimum and the visit count")
{
    const auto t = time_generator(algo::accel_asc, 30, 3, 0, bench_sink::count_only);
    CHECK(t.visits == 5604);
    CHECK(t.min_seconds > 0.0);
    const auto c = time_generator(algo::accel_asc, 30, 1, 1, bench_sink::checksum_parts);
    CHECK(c.visits == 5604);
    CHECK(c.checksum != 0);
    CHECK_THROWS_AS(time_generator(algo::accel_asc, 10, 0, 0, bench_sink::count_only), domain_error);
    CHECK_THROWS_AS(time_generator(algo::accel_asc, 10, 1, -1, bench_sink::count_only), domain_error);
}

TEST_CASE("run_bench covers every pair in order")
{
    bench_config cfg{{algo::rule_asc, algo::rule_desc}, {10, 20}, 1, 0, bench_sink::count_only};
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 10);
    CHECK(rows[1].kind == algo::rule_desc);
    CHECK(rows[3].visits == 627);
}

TEST_CASE("csv formatting")
{
    std::vector<ratio_report> rows(2);
    rows[0].n = 100;
    rows[0].predicted = 0.73734;
    rows[0].measured = 0.71234;
    rows[1].n = 61;
    rows[1].predicted = 0.5371;
    CHECK(bench_csv(rows) == "n,predicted,measured\n100,0.74,0.7123\n61,0.54,\n");
}
