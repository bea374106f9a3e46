#include "support.hpp"

using namespace partgen;
using testing::big;

namespace {
composition asc(std::vector<part_t> v) { return validate(std::move(v), order::ascending); }
composition desc(std::vector<part_t> v) { return validate(std::move(v), order::descending); }
} // namespace

TEST_CASE("validate accepts well formed compositions")
{
    const auto a = asc({1, 1, 2});
    CHECK(a.n() == 4);
    CHECK(a.k() == 3);
    CHECK(a.part(3) == 2);
    CHECK(a.order() == order::ascending);

    const auto d = desc({4, 2, 1, 1});
    CHECK(d.n() == 8);
    CHECK(d.k() == 4);
}

TEST_CASE("validate rejects malformed input")
{
    CHECK_THROWS_AS(asc({2, 1}), order_violation);
    CHECK_THROWS_AS(desc({1, 2}), order_violation);
    CHECK_THROWS_AS(asc({}), empty_input);
    CHECK_THROWS_AS(asc({0, 1}), domain_error);
    CHECK_THROWS_AS(desc({3, -1}), domain_error);
    CHECK_THROWS_AS(asc({1}).part(2), std::out_of_range);
}

TEST_CASE("compositions print with angle brackets and compare lexicographically")
{
    std::ostringstream os;
    os << asc({1, 1, 2});
    CHECK(os.str() == "<1,1,2>");
    CHECK(to_string(asc({1, 3}).parts()) == "1+3");
    CHECK(to_string(asc({1, 3}).parts(), ' ') == "1 3");
    CHECK(asc({1, 1, 2}) < asc({1, 3}));
    CHECK(asc({2, 2}) == asc({2, 2}));
    CHECK(asc({2, 2}) != desc({2, 2}));
    CHECK(reversed(asc({1, 1, 2})) == desc({2, 1, 1}));
}

TEST_CASE("lexmin_asc")
{
    CHECK(lexmin_asc(5, 3) == asc({5}));
    CHECK(lexmin_asc(6, 2) == asc({2, 2, 2}));
    CHECK(lexmin_asc(5, 2) == asc({2, 3}));
    CHECK(lexmin_asc(1, 1) == asc({1}));
    CHECK_THROWS_AS(lexmin_asc(5, 0), domain_error);
    CHECK_THROWS_AS(lexmin_asc(5, 6), domain_error);
}

TEST_CASE("lexmin_asc agrees with the brute force minimum")
{
    for (int n = 1; n <= 20; ++n)
        for (int m = 1; m <= n; ++m) {
            std::vector<part_t> best;
            for (const auto& p : oracle::ascending_lex(n))
                if (p.front() >= m && (best.empty() || p < best))
                    best = p;
            const auto lm = lexmin_asc(n, m);
            REQUIRE(std::vector<part_t>(lm.parts().begin(), lm.parts().end()) == best);
        }
}

TEST_CASE("lexsucc_asc")
{
    CHECK(lexsucc_asc(asc({1, 1, 2})) == asc({1, 3}));
    CHECK(lexsucc_asc(asc({2, 2})) == asc({4}));
    CHECK(lexsucc_asc(asc({1, 3})) == asc({2, 2}));
    CHECK_THROWS_AS(lexsucc_asc(asc({4})), no_successor);
}

TEST_CASE("lexsucc_desc")
{
    CHECK(lexsucc_desc(desc({3, 3, 2, 1, 1, 1, 1})) == desc({3, 3, 1, 1, 1, 1, 1, 1}));
    CHECK(lexsucc_desc(desc({12})) == desc({11, 1}));
    CHECK(lexsucc_desc(desc({4, 4})) == desc({4, 3, 1}));
    CHECK_THROWS_AS(lexsucc_desc(desc({1, 1, 1})), no_successor);
}

TEST_CASE("successor functions walk the brute force orders")
{
    for (int n = 1; n <= 18; ++n) {
        const auto a = oracle::ascending_lex(n);
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            REQUIRE(lexsucc_asc(asc(a[i])) == asc(a[i + 1]));
        const auto d = oracle::descending_revlex(n);
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            REQUIRE(lexsucc_desc(desc(d[i])) == desc(d[i + 1]));
    }
}

TEST_CASE("terminal classification")
{
    CHECK(classify(asc({5})) == terminal_class::terminal);
    CHECK(classify(asc({1, 3})) == terminal_class::terminal);
    CHECK(classify(asc({2, 2})) == terminal_class::nonterminal);

    std::size_t terminal = 0;
    const auto all = oracle::ascending_lex(12);
    for (const auto& p : all)
        terminal += classify(asc(p)) == terminal_class::terminal;
    CHECK(all.size() == 77);
    CHECK(terminal == 35);
}
