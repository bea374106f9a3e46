#include "support.hpp"

using namespace partgen;
using testing::big;

TEST_CASE("partition numbers")
{
    const auto t = build_tables(120);
    CHECK(t.p(12) == big(77));
    CHECK(t.p(61) == big(1121505));
    CHECK(t.p(100) == big(190569292));
    CHECK(t.p(0) == big(1));
    CHECK(t.p(-1) == big(0));

    const auto penta = oracle::pentagonal_p(120);
    for (int n = 0; n <= 120; ++n)
        REQUIRE(t.p(n) == penta[n]);
}

TEST_CASE("restricted counts")
{
    const auto t = build_tables(40);
    CHECK(t.ndcf(8, 4) == big(5));
    CHECK(t.nac(6, 2) == big(4));
    CHECK(t.nac(6, 7) == big(0));
    CHECK(t.nac(0, 1) == big(1));
    CHECK(t.ntac(12, 1) == big(35));
    CHECK_THROWS_AS(t.nac(41, 1), not_tabulated);
    CHECK_THROWS_AS(t.nac(6, 0), domain_error);
}

TEST_CASE("restricted counts match brute force")
{
    const auto t = build_tables(20);
    for (int n = 1; n <= 20; ++n) {
        const auto all = oracle::partitions(n);
        for (int m = 1; m <= n; ++m) {
            count_t first_ge = 0, largest_eq = 0, term = 0;
            for (const auto& p : all) {
                first_ge += p.front() >= m;
                largest_eq += p.back() == m;
                if (p.front() >= m && classify(std::span<const part_t>(p)) == terminal_class::terminal)
                    ++term;
            }
            REQUIRE(t.nac(n, m) == first_ge);
            REQUIRE(t.ndcf(n, m) == largest_eq);
            REQUIRE(t.ntac(n, m) == term);
        }
    }
}

TEST_CASE("terminal and nonterminal totals")
{
    const auto t = build_tables(20);
    CHECK(terminal_count(t, 12) == big(35));
    CHECK(terminal_count(t, 1) == big(1));
    CHECK(terminal_count(t, 2) == big(1));
    CHECK(nonterminal_count(t, 12) == big(42));
    CHECK(nonterminal_count(t, 2) == big(1));
    CHECK(nonterminal_count(t, 1) == big(0));
}

TEST_CASE("ones_total")
{
    const auto t = build_tables(25);
    CHECK(ones_total(t, 12) == big(195));
    CHECK(ones_total(t, 1) == big(1));
    CHECK(ones_total(t, 2) == big(2));
    for (int n = 1; n <= 25; ++n) {
        count_t ones = 0;
        for (const auto& p : oracle::partitions(n))
            ones += static_cast<count_t>(std::count(p.begin(), p.end(), 1));
        REQUIRE(ones_total(t, n) == ones);
    }
}

TEST_CASE("p(n) from the largest parts of the successor walk")
{
    CHECK(pn_via_largest_parts(1) == big(1));
    CHECK(pn_via_largest_parts(12) == big(77));
    const auto t = build_tables(45);
    for (int n = 1; n <= 45; ++n)
        REQUIRE(pn_via_largest_parts(n) == t.p(n));
}

TEST_CASE("asymptotic ratios")
{
    CHECK(approx_ratio(approx_kind::sum_over_p, 100) == Catch::Approx(8.80).margin(0.01));
    CHECK(1.0 - approx_ratio(approx_kind::pn_minus2_over_pn, 1000) == Catch::Approx(0.08).margin(0.005));
    CHECK(approx_ratio(approx_kind::pn_minus1_over_pn, 100000000) == Catch::Approx(1.0).margin(0.001));
}

TEST_CASE("table capacity and overflow")
{
    CHECK_THROWS_AS(build_tables(0), domain_error);
    CHECK_THROWS_AS(build_tables(10, table_limits{5}), capacity_error);
    CHECK_THROWS_AS(build_tables(1500), overflow_error);
    CHECK_NOTHROW(build_tables(1400));
}
