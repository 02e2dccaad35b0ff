#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "semla/errors.hpp"

namespace semla {

// Odometer step over base-q digit tuples, rightmost digit fastest. This is
// the canonical enumeration order used everywhere a "first witness" or a
// stable stream order is promised. Returns false when the tuple wraps back
// to all zeros.
inline bool next_assignment(std::vector<std::size_t>& digits, std::size_t base) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base)
            return true;
        digits[i] = 0;
    }
    return false;
}

// base^exp, saturating at UINT64_MAX.
inline std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

inline void require_within_guard(std::uint64_t candidates, std::uint64_t guard = kSearchGuard) {
    if (candidates > guard)
        throw SearchTooLargeError(candidates, guard);
}

// Upper-triangle positions (i <= j) of an n x n matrix in row-major order:
// (0,0), (0,1), ..., (0,n-1), (1,1), ... This fixes both the canonical
// order of symmetric-matrix enumeration and the base-q state encoding.
inline std::vector<std::pair<std::size_t, std::size_t>> upper_triangle_positions(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    pos.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            pos.emplace_back(i, j);
    return pos;
}

} // namespace semla
