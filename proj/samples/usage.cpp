// A short tour of the library: visit, stream, count, instrument, predict.
#include <iostream>

#include "partgen/partgen.hpp"

int main()
{
    using namespace partgen;

    // Callback style: the fastest path, no copies.
    std::cout << "accel-asc, n=5:\n";
    generate(generator_spec{algo::accel_asc, 5, std::nullopt},
             [](std::span<const part_t> a) { std::cout << "  " << to_string(a) << '\n'; });

    // Pull style: take compositions one at a time.
    std::cout << "first three of rule-desc, n=6:";
    composition_stream s(generator_spec{algo::rule_desc, 6, std::nullopt});
    for (int i = 0; i < 3; ++i)
        if (auto c = s.next_composition())
            std::cout << ' ' << *c;
    std::cout << '\n';

    const auto t = build_tables(100);
    std::cout << "p(100) = " << to_string(t.p(100)) << '\n';

    auto run = attach(generator_spec{algo::accel_desc, 12, std::nullopt}, instrument_mode::counts_only);
    std::cout << "accel-desc n=12: " << format_counts(run.run()) << '\n';

    std::cout << "predicted accel ratio at n=100: " << round_for_table(predicted_ratio(t, algo_pair::accelerated, 100))
              << '\n';
}
