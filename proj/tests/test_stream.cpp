#include "support.hpp"

using namespace partgen;

TEST_CASE("stream yields the same sequence as the callback form")
{
    for (algo a : all_algos) {
        CAPTURE(name(a));
        composition_stream s(generator_spec{a, 15, std::nullopt});
        CHECK(s.collect() == testing::run_all(a, 15));
        CHECK_FALSE(s.next().has_value());
    }
}

TEST_CASE("pulling one at a time")
{
    auto s = stream(generator_spec{algo::rule_asc, 4, std::nullopt});
    REQUIRE(s.next_composition() == validate(std::vector<part_t>{1, 1, 1, 1}, order::ascending));
    REQUIRE(s.next_composition() == validate(std::vector<part_t>{1, 1, 2}, order::ascending));
    std::size_t rest = 0;
    for (auto parts : s) {
        (void)parts;
        ++rest;
    }
    CHECK(rest == 3);
}

TEST_CASE("abandoning a stream part way is safe")
{
    for (int i = 0; i < 50; ++i) {
        composition_stream s(generator_spec{algo::rec_desc, 40, std::nullopt});
        REQUIRE(s.next().has_value());
    }
}

TEST_CASE("materialize and argument checks")
{
    const auto all = materialize(generator_spec{algo::accel_desc, 8, std::nullopt});
    CHECK(all.size() == 22);
    CHECK(all.front().order() == order::descending);
    CHECK_THROWS_AS(composition_stream(generator_spec{algo::accel_asc, 0, std::nullopt}), domain_error);
    CHECK_THROWS_AS(composition_stream(generator_spec{algo::rec_asc, 5, 9}), domain_error);
    CHECK_THROWS_AS(composition_stream(generator_spec{algo::rule_asc, 5, 2}), domain_error);
}

TEST_CASE("recursive generators run on the coroutine stack at depth")
{
    composition_stream s(generator_spec{algo::rec_desc, 2000, 2000});
    const auto all = s.collect();
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::vector<part_t>{2000});
}
