#ifndef LOBBY_RATIONAL_HPP
#define LOBBY_RATIONAL_HPP

#include <cstdint>
#include <limits>

#include "lobby/errors.hpp"

namespace lobby {

/// Exact comparison of a/b against c/d with b, d > 0. Cross-multiplies in
/// 128-bit so no intermediate overflow for 64-bit inputs.
inline int cmp_frac(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    __int128 lhs = static_cast<__int128>(a) * d;
    __int128 rhs = static_cast<__int128>(c) * b;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

/// Threshold comparison mode: STRICT means "> t", WEAK means ">= t".
enum class Comparison { Strict, Weak };

/// True iff a/b lies above num/den under the given mode.
inline bool above_threshold(std::int64_t a, std::int64_t b, std::int64_t num,
                            std::int64_t den, Comparison mode) {
    int c = cmp_frac(a, b, num, den);
    return mode == Comparison::Strict ? c > 0 : c >= 0;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit multiplication overflow");
    return r;
}

}  // namespace lobby

#endif
