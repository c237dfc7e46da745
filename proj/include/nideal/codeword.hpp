#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nideal/bits.hpp"
#include "nideal/errors.hpp"

namespace nideal {

// A fixed-length word over F2. Bit i (1-based) is the value of x_i; the
// text form writes bit 1 first, so "110" has x1 = x2 = 1 and x3 = 0.
class Codeword {
public:
    Codeword(int n, Mask bits) : n_(n), bits_(bits)
    {
        check_ambient(n);
        if (bits & ~full_mask(n))
            throw ValidationError("LengthMismatch: codeword bits exceed length " + std::to_string(n));
    }

    static Codeword from_string(std::string_view s)
    {
        if (s.empty())
            throw ParseError("empty codeword");
        if (s.size() > static_cast<std::size_t>(kMaxVars))
            throw BoundError("AmbientTooLarge: codeword longer than " + std::to_string(kMaxVars));
        Mask bits = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == '1')
                bits |= mask_bit(static_cast<int>(k) + 1);
            else if (s[k] != '0')
                throw ParseError(std::string("invalid codeword character '") + s[k] + "'");
        }
        return Codeword(static_cast<int>(s.size()), bits);
    }

    int n() const { return n_; }
    Mask bits() const { return bits_; }
    Mask support() const { return bits_; }
    bool bit(int i) const { return mask_has(bits_, i); }

    std::string to_string() const
    {
        std::string out(static_cast<std::size_t>(n_), '0');
        for (int i = 1; i <= n_; ++i)
            if (bit(i))
                out[static_cast<std::size_t>(i - 1)] = '1';
        return out;
    }

    friend bool operator==(const Codeword&, const Codeword&) = default;

private:
    int n_;
    Mask bits_;
};

// Value of the bitstring read as a binary integer with bit 1 most
// significant; the canonical display order sorts ascending by this.
inline std::uint32_t string_rank(const Codeword& v)
{
    std::uint32_t r = 0;
    for (int i = 1; i <= v.n(); ++i)
        r = (r << 1) | (v.bit(i) ? 1u : 0u);
    return r;
}

inline bool codeword_less(const Codeword& a, const Codeword& b)
{
    return string_rank(a) < string_rank(b);
}

} // namespace nideal
