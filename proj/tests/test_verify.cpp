#include "support.hpp"

using namespace partgen;

TEST_CASE("the suite passes on the real generators")
{
    const auto r = run_verification(30);
    for (const auto& p : r.results) {
        INFO(p.name << ": " << p.detail);
        CHECK(p.passed);
    }
    CHECK(r.passed());
    CHECK(r.results.size() >= 10);
}

TEST_CASE("every injected fault is detected")
{
    for (algo a : all_algos)
        for (auto k : {mutation_kind::drop_visit, mutation_kind::corrupt_parts, mutation_kind::extra_read}) {
            CAPTURE(name(a), name(k));
            const auto r = run_verification(12, mutation{a, k});
            CHECK_FALSE(r.passed());
            CHECK_FALSE(r.failures().empty());
        }
}

TEST_CASE("mutation parsing and range checks")
{
    const auto m = parse_mutation("accel-asc:drop-visit");
    REQUIRE(m.has_value());
    CHECK(m->target == algo::accel_asc);
    CHECK(m->kind == mutation_kind::drop_visit);
    CHECK_FALSE(parse_mutation("accel-asc").has_value());
    CHECK_FALSE(parse_mutation("nope:drop-visit").has_value());
    CHECK_FALSE(parse_mutation("rule-asc:explode").has_value());
    CHECK_THROWS_AS(run_verification(0), domain_error);
    CHECK_THROWS_AS(run_verification(5000), domain_error);
}
