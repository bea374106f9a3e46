#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "partgen/error.hpp"

namespace partgen {

// Exact partition counts. 128 bits hold p(n) up to n = 1458.
__extension__ typedef unsigned __int128 count_t;

inline count_t checked_add(count_t a, count_t b)
{
    count_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("exact count exceeds 128-bit capacity");
    return r;
}

inline std::string to_string(count_t v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline long double to_real(count_t v)
{
    return static_cast<long double>(v);
}

} // namespace partgen
