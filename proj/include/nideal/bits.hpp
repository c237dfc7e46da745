#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nideal/errors.hpp"

namespace nideal {

// Index sets over {1..n} packed into a word: bit k-1 holds index k.
using Mask = std::uint32_t;

// Structural cap on ambient variable counts. Everything here enumerates
// sooner or later, so there is no point pretending to support wide words.
inline constexpr int kMaxVars = 24;

// Bound for the multilinear identity oracle (2^n coefficient universe).
inline constexpr int kOracleMaxVars = 16;

inline void check_ambient(int n)
{
    if (n < 1)
        throw ValidationError("ambient variable count must be positive, got " + std::to_string(n));
    if (n > kMaxVars)
        throw BoundError("AmbientTooLarge: n = " + std::to_string(n) + " exceeds structural cap "
                         + std::to_string(kMaxVars));
}

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline Mask mask_bit(int i) { return Mask{1} << (i - 1); }

inline bool mask_has(Mask m, int i) { return (m >> (i - 1)) & 1u; }

inline int mask_size(Mask m) { return std::popcount(m); }

// Ascending 1-based indices of a mask.
inline std::vector<int> mask_indices(Mask m)
{
    std::vector<int> out;
    while (m) {
        Mask low = m & (~m + 1u);
        out.push_back(std::countr_zero(low) + 1);
        m ^= low;
    }
    return out;
}

// Lexicographic order on index sets read as ascending sequences, with a
// proper prefix sorting before its extensions ({1} < {1,2} < {2}).
inline bool lex_mask_less(Mask a, Mask b)
{
    while (a && b) {
        Mask la = a & (~a + 1u);
        Mask lb = b & (~b + 1u);
        if (la != lb)
            return la < lb;
        a ^= la;
        b ^= lb;
    }
    return a == 0 && b != 0;
}

// "{2,4}" notation; "{}" for the empty set.
inline std::string format_index_set(Mask m)
{
    std::string out = "{";
    bool first = true;
    for (int i : mask_indices(m)) {
        if (!first)
            out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace nideal
