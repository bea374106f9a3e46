#pragma once

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "partgen/partgen.hpp"

namespace Catch {
template <>
struct StringMaker<partgen::count_t> {
    static std::string convert(partgen::count_t v) { return partgen::to_string(v); }
};
} // namespace Catch

namespace testing {

using parts_list = std::vector<std::vector<partgen::part_t>>;

inline parts_list run_all(partgen::algo a, std::int64_t n, std::optional<std::int64_t> m = std::nullopt)
{
    parts_list out;
    partgen::generate(partgen::generator_spec{a, n, m},
                      [&](std::span<const partgen::part_t> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
}

inline partgen::op_counts counts_of(partgen::algo a, std::int64_t n, bool include_init = false)
{
    auto r = partgen::attach(partgen::generator_spec{a, n, std::nullopt},
                             partgen::instrument_mode::counts_only, include_init);
    return r.run();
}

inline partgen::count_t big(unsigned long long v)
{
    return static_cast<partgen::count_t>(v);
}

} // namespace testing
