#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hypertriplet {

// Exact nonnegative rational. Deliberately never reduced to lowest terms:
// comparisons cross-multiply in 128-bit, so 2/2 and 1/1 compare equal while
// keeping their original representation.
struct Weight {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool operator==(const Weight& a, const Weight& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

inline double weight_value(const Weight& w) {
    return static_cast<double>(w.num) / static_cast<double>(w.den);
}

inline std::string weight_string(const Weight& w) {
    return std::to_string(w.num) + "/" + std::to_string(w.den);
}

}  // namespace hypertriplet
