#pragma once

#include <cstdint>
#include <vector>

#include "altsum/rational.hpp"

namespace altsum {

/// A p-tuple of nonnegative integers.
using MultiIndex = std::vector<int>;

inline long long norm_l1(const MultiIndex& a) {
    long long s = 0;
    for (int x : a) s += x;
    return s;
}

/// alpha! = prod alpha_r!
inline Int mi_factorial(const MultiIndex& a) {
    Int f = 1;
    for (int x : a)
        for (int i = 2; i <= x; ++i) f *= i;
    return f;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// All nonnegative integer tuples of length `parts` summing to `total`,
/// in ascending lexicographic order. Count is C(total+parts-1, parts-1).
inline std::vector<MultiIndex> compositions(int total, int parts) {
    if (parts < 1) throw std::invalid_argument("compositions: parts must be >= 1");
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(parts), 0);
    // Walk positions recursively; last coordinate absorbs the remainder.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

/// Iterates all tuples in the box [lo, hi] (inclusive, entrywise),
/// lexicographically; calls fn(tuple). Empty if any lo_r > hi_r.
template <typename F>
inline void for_each_tuple(const std::vector<int>& lo, const std::vector<int>& hi, F&& fn) {
    const std::size_t p = lo.size();
    for (std::size_t r = 0; r < p; ++r)
        if (lo[r] > hi[r]) return;
    std::vector<int> cur(lo);
    while (true) {
        fn(cur);
        std::size_t r = p;
        while (r > 0) {
            --r;
            if (cur[r] < hi[r]) {
                ++cur[r];
                for (std::size_t s = r + 1; s < p; ++s) cur[s] = lo[s];
                break;
            }
            if (r == 0) return;
        }
        if (p == 0) return;
    }
}

/// Subsets of [p] as bitmasks; bit r set means coordinate r+1 is in J.
inline std::uint32_t full_mask(int p) {
    return p >= 32 ? ~0u : ((1u << p) - 1u);
}

inline int popcount_mask(std::uint32_t m) {
    int c = 0;
    while (m) {
        c += static_cast<int>(m & 1u);
        m >>= 1;
    }
    return c;
}

}  // namespace altsum
